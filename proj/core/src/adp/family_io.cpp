#include "qcadp/adp/family_io.hpp"

#include "qcadp/poly/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qcadp::adp {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

poly::Polynomial value_to_poly(const QuadraticValue& v) {
    const int n = v.dim();
    poly::Polynomial p(n);
    p.add_term(poly::Exponent(n), v.r);
    for (int i = 0; i < n; ++i) {
        poly::Exponent e(n);
        e[i] = 1;
        p.add_term(e, v.q[i]);
        for (int j = i; j < n; ++j) {
            poly::Exponent e2(n);
            e2[i] += 1;
            e2[j] += 1;
            p.add_term(e2, i == j ? v.P(i, i) : v.P(i, j) + v.P(j, i));
        }
    }
    return p;
}

QuadraticValue poly_to_value(const poly::Polynomial& p, int n) {
    QuadraticValue v;
    v.P = Eigen::MatrixXd::Zero(n, n);
    v.q = Eigen::VectorXd::Zero(n);
    v.r = 0.0;
    for (const auto& [e, c] : p.terms()) {
        const int d = e.degree();
        if (d == 0) {
            v.r = c;
        } else if (d == 1) {
            for (int i = 0; i < n; ++i) {
                if (e[i] == 1) v.q[i] = c;
            }
        } else if (d == 2) {
            int i = -1, j = -1;
            for (int t = 0; t < n; ++t) {
                if (e[t] == 2) i = j = t;
                if (e[t] == 1) (i < 0 ? i : j) = t;
            }
            if (i == j) {
                v.P(i, i) = c;
            } else {
                v.P(i, j) = c / 2.0;
                v.P(j, i) = c / 2.0;
            }
        } else {
            throw std::runtime_error("family file: value polynomial has degree > 2");
        }
    }
    return v;
}

} // namespace

void save_family(const std::filesystem::path& file, const ValueFunctionFamily& fam) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("family: cannot write " + file.string());
    out << "qcadp-family v1\n";
    out << "states " << fam.n_states << " inputs " << fam.n_inputs << " dt " << num(fam.dt)
        << " discount " << num(fam.discount) << "\n";
    out << "hover";
    for (int i = 0; i < fam.hover_input.size(); ++i) out << " " << num(fam.hover_input[i]);
    out << "\ninput_scale";
    for (int i = 0; i < fam.input_scale.size(); ++i) out << " " << num(fam.input_scale[i]);
    out << "\nmembers " << fam.members.size() << "\n";
    for (std::size_t k = 0; k < fam.members.size(); ++k) {
        const auto& m = fam.members[k];
        const auto value_poly = value_to_poly(m.value);
        out << "member " << k << " scale " << num(m.weight_scale) << " objective "
            << num(m.objective) << " ok " << (m.report.ok ? 1 : 0) << " termination "
            << (m.report.termination.empty() ? "none" : m.report.termination) << "\n";
        out << "sigma";
        for (int i = 0; i < m.sigma_diag.size(); ++i) out << " " << num(m.sigma_diag[i]);
        out << "\n";
        out << "objective_trace " << m.report.objective_trace.size();
        for (double o : m.report.objective_trace) out << " " << num(o);
        out << "\n";
        out << "value_terms " << value_poly.term_count() << "\n";
        poly::write_polynomial(out, value_poly);
        out << "cert_terms " << m.report.bellman_certificate.term_count() << "\n";
        poly::write_polynomial(out, m.report.bellman_certificate);
    }
}

ValueFunctionFamily load_family(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("family: cannot open " + file.string());
    std::string tag, version;
    in >> tag >> version;
    if (tag != "qcadp-family" || version != "v1") {
        throw std::runtime_error("family: unrecognized header");
    }
    ValueFunctionFamily fam;
    std::size_t n_members = 0;
    in >> tag >> fam.n_states >> tag >> fam.n_inputs >> tag >> fam.dt >> tag >> fam.discount;
    in >> tag;
    fam.hover_input.resize(fam.n_inputs);
    for (int i = 0; i < fam.n_inputs; ++i) in >> fam.hover_input[i];
    in >> tag;
    fam.input_scale.resize(fam.n_inputs);
    for (int i = 0; i < fam.n_inputs; ++i) in >> fam.input_scale[i];
    in >> tag >> n_members;
    if (!in) throw std::runtime_error("family: truncated header");

    for (std::size_t k = 0; k < n_members; ++k) {
        FamilyMember m;
        std::size_t idx, n_terms;
        int ok_flag;
        in >> tag >> idx >> tag >> m.weight_scale >> tag >> m.objective >> tag >> ok_flag >>
            tag >> m.report.termination;
        m.report.ok = ok_flag != 0;
        in >> tag;
        m.sigma_diag.resize(fam.n_states);
        for (int i = 0; i < fam.n_states; ++i) in >> m.sigma_diag[i];
        std::size_t n_trace = 0;
        in >> tag >> n_trace;
        m.report.objective_trace.resize(n_trace);
        for (std::size_t i = 0; i < n_trace; ++i) in >> m.report.objective_trace[i];
        in >> tag >> n_terms;
        m.value = poly_to_value(poly::read_polynomial(in, fam.n_states, n_terms), fam.n_states);
        in >> tag >> n_terms;
        m.report.bellman_certificate =
            poly::read_polynomial(in, fam.n_states + fam.n_inputs, n_terms);
        if (!in) throw std::runtime_error("family: truncated member block");
        fam.members.push_back(std::move(m));
    }
    return fam;
}

} // namespace qcadp::adp
