#include "upb/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace upb {

SystemSpec::SystemSpec(std::vector<int> dims) : caller_(std::move(dims)) {
    if (caller_.size() < 2) throw DomainError("a system needs at least 2 parties");
    for (int d : caller_) {
        if (d < 2) throw DomainError("every local dimension must be at least 2");
    }
    order_.resize(caller_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return caller_[a] < caller_[b]; });
    sorted_.reserve(caller_.size());
    for (int idx : order_) sorted_.push_back(caller_[idx]);
}

void ProductBasis::validate() const {
    if (dims.size() < 2) throw DomainError("a product basis needs at least 2 parties");
    if (states.empty()) throw DomainError("a product basis needs at least 1 state");
    for (const ProductState& s : states) {
        if (s.factors.size() != dims.size())
            throw DimensionError("state has wrong number of local factors");
        for (std::size_t j = 0; j < dims.size(); ++j) {
            if (s.factors[j].size() != dims[j])
                throw DimensionError("local vector length does not match party dimension");
            if (std::abs(s.factors[j].norm() - 1.0) > 1e-10)
                throw DomainError("local vectors must have unit norm");
        }
    }
}

} // namespace upb
