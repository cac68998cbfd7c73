#include "qcadp/conic/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qcadp::conic {

namespace {

const char* kind_name(ConeBlock::Kind k) {
    switch (k) {
        case ConeBlock::Kind::Zero: return "zero";
        case ConeBlock::Kind::NonNeg: return "nonneg";
        case ConeBlock::Kind::Soc: return "soc";
        case ConeBlock::Kind::Psd: return "psd";
    }
    return "?";
}

ConeBlock::Kind kind_from(const std::string& s) {
    if (s == "zero") return ConeBlock::Kind::Zero;
    if (s == "nonneg") return ConeBlock::Kind::NonNeg;
    if (s == "soc") return ConeBlock::Kind::Soc;
    if (s == "psd") return ConeBlock::Kind::Psd;
    throw std::runtime_error("conic text: unknown cone kind " + s);
}

void num(std::ostream& os, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

} // namespace

void write_problem(std::ostream& os, const ConicProblem& p) {
    os << "conic " << p.n_vars << " " << p.total_rows() << " " << p.cones.size() << "\n";
    for (const auto& blk : p.cones) {
        os << "cone " << kind_name(blk.kind) << " " << blk.dim << "\n";
    }
    os << "c";
    for (int i = 0; i < p.c.size(); ++i) {
        os << " ";
        num(os, p.c[i]);
    }
    os << "\nb";
    for (int i = 0; i < p.b.size(); ++i) {
        os << " ";
        num(os, p.b[i]);
    }
    os << "\nA " << p.A.size() << "\n";
    for (const auto& t : p.A) {
        os << t.row() << " " << t.col() << " ";
        num(os, t.value());
        os << "\n";
    }
}

ConicProblem read_problem(std::istream& is) {
    std::string tag;
    ConicProblem p;
    int n_rows = 0;
    std::size_t n_blocks = 0;
    if (!(is >> tag >> p.n_vars >> n_rows >> n_blocks) || tag != "conic") {
        throw std::runtime_error("conic text: bad header");
    }
    for (std::size_t i = 0; i < n_blocks; ++i) {
        std::string kind;
        int dim;
        if (!(is >> tag >> kind >> dim) || tag != "cone") {
            throw std::runtime_error("conic text: bad cone line");
        }
        p.cones.push_back(ConeBlock{kind_from(kind), dim});
    }
    if (!(is >> tag) || tag != "c") throw std::runtime_error("conic text: missing c");
    p.c.resize(p.n_vars);
    for (int i = 0; i < p.n_vars; ++i) is >> p.c[i];
    if (!(is >> tag) || tag != "b") throw std::runtime_error("conic text: missing b");
    p.b.resize(n_rows);
    for (int i = 0; i < n_rows; ++i) is >> p.b[i];
    std::size_t nnz = 0;
    if (!(is >> tag >> nnz) || tag != "A") throw std::runtime_error("conic text: missing A");
    for (std::size_t k = 0; k < nnz; ++k) {
        int r, c;
        double v;
        if (!(is >> r >> c >> v)) throw std::runtime_error("conic text: truncated triplets");
        p.A.emplace_back(r, c, v);
    }
    p.validate();
    return p;
}

} // namespace qcadp::conic
