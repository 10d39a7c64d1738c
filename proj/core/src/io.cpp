#include "upb/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "upb/numerics.hpp"

namespace upb {

namespace {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

std::string format_complex(const Complex& z) {
    std::string out = format_double(z.real());
    out += (z.imag() < 0.0 || std::signbit(z.imag())) ? "-" : "+";
    out += format_double(std::abs(z.imag()));
    out += "j";
    return out;
}

Complex parse_complex(const std::string& token) {
    if (token.empty()) throw ParseError("empty matrix entry");
    const bool has_j = token.back() == 'j' || token.back() == 'J';
    const std::string body = has_j ? token.substr(0, token.size() - 1) : token;
    if (body.empty()) throw ParseError("bare imaginary unit in matrix entry");

    auto to_double = [](const std::string& s) {
        if (s == "+" || s.empty()) return 1.0;
        if (s == "-") return -1.0;
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(s, &used);
        } catch (const std::exception&) {
            throw ParseError("bad numeric field '" + s + "'");
        }
        if (used != s.size()) throw ParseError("trailing characters in numeric field '" + s + "'");
        return value;
    };

    // Split at the last sign that is neither leading nor part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        const char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (!has_j) {
        if (split != std::string::npos)
            throw ParseError("real entry with embedded sign: '" + token + "'");
        return {to_double(body), 0.0};
    }
    if (split == std::string::npos) return {0.0, to_double(body)}; // pure imaginary
    return {to_double(body.substr(0, split)), to_double(body.substr(split))};
}

std::string write_matrix_text(const CMatrix& m) {
    if (m.rows() < 1 || m.cols() < 1) throw DimensionError("cannot write an empty matrix");
    const bool integral = is_integral(m, 1e-12);
    std::ostringstream out;
    out << m.rows() << " " << m.cols() << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out << " ";
            if (integral) {
                out << static_cast<long long>(std::llround(m(i, j).real()));
            } else {
                out << format_complex(m(i, j));
            }
        }
        out << "\n";
    }
    return out.str();
}

CMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    Eigen::Index rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows < 1 || cols < 1)
        throw ParseError("matrix text must start with 'rows cols'");
    CMatrix m(rows, cols);
    std::string token;
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (!(in >> token)) throw ParseError("matrix text ended early");
            m(i, j) = parse_complex(token);
        }
    }
    if (in >> token) throw ParseError("trailing data after matrix entries");
    return m;
}

void save_matrix_text(const CMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << write_matrix_text(m);
}

CMatrix load_matrix_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_text(buf.str());
}

std::string to_json_string(const ProductBasis& pb, int indent) {
    nlohmann::json j;
    j["dims"] = pb.dims;
    j["size"] = pb.size();
    nlohmann::json states = nlohmann::json::array();
    for (const ProductState& s : pb.states) {
        nlohmann::json state = nlohmann::json::array();
        for (const CVector& f : s.factors) {
            nlohmann::json factor = nlohmann::json::array();
            for (Eigen::Index i = 0; i < f.size(); ++i)
                factor.push_back({f(i).real(), f(i).imag()});
            state.push_back(std::move(factor));
        }
        states.push_back(std::move(state));
    }
    j["states"] = std::move(states);
    j["construction"] = pb.construction;
    j["seed"] = pb.seed;
    if (pb.b.has_value()) {
        j["b"] = *pb.b;
    } else {
        j["b"] = nullptr;
    }
    return j.dump(indent);
}

ProductBasis product_basis_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad product-basis JSON: ") + e.what());
    }
    try {
        ProductBasis pb;
        pb.dims = j.at("dims").get<std::vector<int>>();
        pb.construction = j.value("construction", std::string("file"));
        pb.seed = j.value("seed", std::uint64_t{0});
        if (j.contains("b") && !j.at("b").is_null()) pb.b = j.at("b").get<int>();
        for (const auto& state : j.at("states")) {
            ProductState s;
            for (const auto& factor : state) {
                CVector f(factor.size());
                Eigen::Index i = 0;
                for (const auto& entry : factor) {
                    f(i++) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
                }
                s.factors.push_back(std::move(f));
            }
            pb.states.push_back(std::move(s));
        }
        if (j.contains("size") && j.at("size").get<int>() != pb.size())
            throw ParseError("'size' field disagrees with the number of states");
        pb.validate();
        return pb;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad product-basis JSON: ") + e.what());
    }
}

void save_product_basis(const ProductBasis& pb, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << to_json_string(pb) << "\n";
}

ProductBasis load_product_basis(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return product_basis_from_json(buf.str());
}

} // namespace upb
