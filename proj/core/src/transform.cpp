#include "bifix/transform.hpp"

#include "bifix/errors.hpp"

namespace bifix {

Transformation identity(int n) {
    Transformation t;
    t.target.resize(n);
    for (State q = 0; q < n; ++q) t.target[q] = q;
    return t;
}

Transformation compose(const Transformation& first, const Transformation& second) {
    if (first.size() != second.size())
        throw input_error("cannot compose transformations of different sizes");
    Transformation out;
    out.target.resize(first.size());
    for (int q = 0; q < first.size(); ++q) out.target[q] = second.target[first.target[q]];
    return out;
}

std::vector<Transformation> letter_transformations(const Dfa& d) {
    std::vector<Transformation> result(d.symbol_count());
    for (int a = 0; a < d.symbol_count(); ++a) {
        result[a].target.resize(d.state_count());
        for (State q = 0; q < d.state_count(); ++q) result[a].target[q] = d.next(q, a);
    }
    return result;
}

} // namespace bifix
