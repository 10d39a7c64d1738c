#include "upb/fixtures.hpp"

namespace upb {

Lemma2Matrix fixture_w532() {
    CMatrix v(4, 10);
    v << 3, 3, 3, 1, 1, -1, -1, 2, -2, 0,
        2, 1, 1, 2, 3, -2, 0, 0, -2, -1,
        2, 1, 1, 1, 1, 5, -3, -4, 2, 1,
        2, 2, 3, 2, 2, 0, 2, 1, 3, 0;
    return {5, 3, 2, std::move(v)};
}

Lemma3Matrix fixture_w2() {
    CMatrix w(9, 12);
    w << 2, 1, 1, 5, 1, 2, 0, 0, 1, 0, 6, 6,
        2, -1, -1, -3, 1, 2, 0, 0, -1, 0, 6, 6,
        1, 2, 0, -4, 4, 1, 0, 0, 2, 1, 3, 3,
        2, 2, 0, 0, -4, -1, 0, 0, 2, 1, 27, 6,
        2, 2, 0, 0, 0, 0, -1, -1, -4, 0, 0, -4,
        1, 2, 0, 0, 0, 0, 1, 2, -4, 0, 0, -2,
        2, 2, 0, 0, 0, 0, 0, 0, 3, -1, -20, -14,
        1, 2, 0, 0, 0, 0, 0, 0, 0, -1, 21, 23,
        2, 2, 0, 0, 0, 0, 0, 0, 0, 0, -31, -12;
    return {2, std::move(w)};
}

Lemma1Matrix fixture_u61() { return build_U_6_1(); }

} // namespace upb
