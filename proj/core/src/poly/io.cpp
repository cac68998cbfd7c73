#include "qcadp/poly/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qcadp::poly {

void write_polynomial(std::ostream& os, const Polynomial& p) {
    char buf[40];
    for (const auto& [e, c] : p.terms()) {
        std::snprintf(buf, sizeof(buf), "%.17g", c);
        os << buf;
        for (std::size_t i = 0; i < p.arity(); ++i) os << " " << int(e[i]);
        os << "\n";
    }
}

Polynomial read_polynomial(std::istream& is, std::size_t arity, std::size_t n_terms) {
    Polynomial p(arity);
    for (std::size_t t = 0; t < n_terms; ++t) {
        double c;
        if (!(is >> c)) throw std::runtime_error("polynomial text: truncated term list");
        Exponent e(arity);
        for (std::size_t i = 0; i < arity; ++i) {
            int pw;
            if (!(is >> pw) || pw < 0) throw std::runtime_error("polynomial text: bad exponent");
            e[i] = static_cast<std::uint8_t>(pw);
        }
        p.add_term(e, c);
    }
    return p;
}

std::string polynomial_to_text(const Polynomial& p) {
    std::ostringstream os;
    write_polynomial(os, p);
    return os.str();
}

} // namespace qcadp::poly
