#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fuchs3/algebraic.hpp"
#include "fuchs3/confvand.hpp"
#include "fuchs3/frobenius.hpp"
#include "fuchs3/system.hpp"

namespace fuchs3 {

template <class S>
S sigma1_by_elimination(const ProblemConfig<S>& cfg)
{
    return det(build_t_system(cfg).t_matrix);
}

// One index set J of the Laplace expansion of det M1 along the H columns.
template <class S>
struct BlockExpansionTerm {
    std::vector<int> J;        // common rows (0-based apparent points) placed in R_J
    int laplace_sign = 1;
    S mu_product;              // prod_{j in J} mu_j
    S r;                       // det R'_J, rows in matrix order
    S s;                       // det S'_J (no third-derivative rows from J)
    std::vector<std::pair<std::vector<int>, S>> s_hat;  // A subset of J, det S'_{J,A}
    S det_R, det_S, contribution;
};

namespace detail {

inline std::vector<std::vector<int>> combinations(int N, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int j = start; j < N; ++j) {
            cur.push_back(j);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

inline bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// Nodes t_1..t_n (multiplicity 1) then q_1..q_N with the given multiplicities.
template <class S>
NodeSpec<S> point_spec(const ProblemConfig<S>& cfg, const std::vector<int>& qmult, bool leading)
{
    NodeSpec<S> spec;
    spec.leading_row = leading;
    for (const auto& t : cfg.t)
        spec.add(t, 1);
    for (int j = 0; j < cfg.N(); ++j)
        spec.add(cfg.q[j], qmult[j]);
    return spec;
}

// det of the I-block S_J divided by prod_{l not in J} nu_l^2, expanded over
// the choice (omega part / nu part) of each third-derivative row in J.
template <class S>
S reduced_s_block(const ProblemConfig<S>& cfg, const DerivedConstants<S>& c, const std::vector<int>& J,
                  BlockExpansionTerm<S>* term)
{
    const int n = cfg.n, N = cfg.N();
    std::vector<int> mult(static_cast<size_t>(N));
    for (int j = 0; j < N; ++j)
        mult[j] = contains(J, j) ? 3 : 4;
    NodeSpec<S> spec = point_spec(cfg, mult, true);
    RowSequence seq;
    for (int l = 0; l < N; ++l)
        if (!contains(J, l))
            seq.push_back({n + l, 2});
    seq.push_back({RowRef::leading, 0});
    for (int i = 0; i < n; ++i)
        seq.push_back({i, 0});
    for (int order = 0; order <= 1; ++order)
        for (int l = 0; l < N; ++l)
            seq.push_back({n + l, order});
    for (int l = 0; l < N; ++l)
        seq.push_back({n + l, contains(J, l) ? 2 : 3});
    const S base = S(inversion_sign(seq)) * confvand_det(spec);

    S total(0);
    const int k = static_cast<int>(J.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
        std::vector<int> A;
        S weight(1);
        for (int b = 0; b < k; ++b) {
            if (mask & (1 << b)) {
                A.push_back(n + J[b]);
                weight = weight * c.nu[J[b]];
            }
            else {
                weight = weight * c.omega[J[b]];
            }
        }
        S value = base;
        if (!A.empty()) {
            S scale(1);
            for (size_t a = 0; a < A.size(); ++a)
                scale = scale * S(3);
            value = base * detail::matching_sum(spec, A) / scale;
        }
        if (term) {
            if (A.empty())
                term->s = value;
            else {
                std::vector<int> Aq;
                for (int a : A)
                    Aq.push_back(a - n);
                term->s_hat.push_back({Aq, value});
            }
        }
        total = total + weight * value;
    }
    return total;
}

} // namespace detail

// Laplace expansion of det M1 over the H columns; every block determinant is a
// (derivative of a) confluent Vandermonde determinant. Enumerates C(3n-5, n-2)
// index sets, so it is limited to n <= 4.
template <class S>
std::pair<S, std::vector<BlockExpansionTerm<S>>> sigma1_by_blocks(const ProblemConfig<S>& cfg)
{
    if (cfg.n < 2 || cfg.n > 4)
        throw Unsupported("block expansion implemented for 2 <= n <= 4");
    require_valid(cfg);
    const auto c = derive_constants(cfg);
    const Layout L(cfg.n);
    const int n = cfg.n, N = cfg.N();
    const int wH = L.h_unknowns();

    long col_sum = 0;
    for (int col = 1; col <= wH; ++col)
        col_sum += col;

    std::vector<BlockExpansionTerm<S>> terms;
    S total(0);
    for (const auto& J : detail::combinations(N, n - 2)) {
        BlockExpansionTerm<S> term;
        term.J = J;

        long row_sum = 0;
        for (int r = 0; r < L.h_rows(); ++r)
            row_sum += r + 1;
        for (int j : J)
            row_sum += L.common(j) + 1;
        term.laplace_sign = (row_sum + col_sum) % 2 == 0 ? 1 : -1;

        std::vector<int> mult(static_cast<size_t>(N));
        for (int j = 0; j < N; ++j)
            mult[j] = detail::contains(J, j) ? 3 : 2;
        NodeSpec<S> rspec = detail::point_spec(cfg, mult, true);
        RowSequence rseq{{RowRef::leading, 0}};
        for (int i = 0; i < n; ++i)
            rseq.push_back({i, 0});
        for (int order = 0; order <= 1; ++order)
            for (int j = 0; j < N; ++j)
                rseq.push_back({n + j, order});
        for (int j : J)
            rseq.push_back({n + j, 2});
        term.r = S(inversion_sign(rseq)) * confvand_det(rspec);
        term.mu_product = S(1);
        for (int j : J)
            term.mu_product = term.mu_product * c.mu[j];
        term.det_R = term.mu_product * term.r;

        S nu_sq(1);
        for (int l = 0; l < N; ++l)
            if (!detail::contains(J, l))
                nu_sq = nu_sq * c.nu[l] * c.nu[l];
        term.det_S = nu_sq * detail::reduced_s_block(cfg, c, J, &term);
        term.contribution = S(term.laplace_sign) * term.det_R * term.det_S;
        total = total + term.contribution;
        terms.push_back(std::move(term));
    }
    return {total, terms};
}

// chi_1 and phi_1 (n = 3), with p_j read as p_j + G_1^{q_j}.
template <class S>
struct ChiPhi {
    S chi, phi, sigma;
    bool matches = false;
};

template <class S>
S ipow(const S& x, int e)
{
    S r(1);
    for (int i = 0; i < e; ++i)
        r = r * x;
    return r;
}

template <class S>
S chi1(const ProblemConfig<S>& cfg)
{
    S v(1);
    for (int a = 0; a < cfg.N(); ++a)
        for (int b = a + 1; b < cfg.N(); ++b)
            v = v * ipow(cfg.q[a] - cfg.q[b], 6);
    for (int a = 0; a < cfg.n; ++a)
        for (int b = a + 1; b < cfg.n; ++b)
            v = v * ipow(cfg.t[a] - cfg.t[b], 2);
    return v;
}

template <class S>
S phi1(const ProblemConfig<S>& cfg, const std::vector<S>& p_eff)
{
    const int N = cfg.N();
    S total(0);
    for (int j = 0; j < N; ++j) {
        S weight(1);
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b)
                if (a != j && b != j)
                    weight = weight * (cfg.q[a] - cfg.q[b]) * (cfg.q[a] - cfg.q[b]);
        for (int l = 0; l < N; ++l)
            if (l != j)
                weight = weight * (cfg.q[j] - cfg.q[l]);
        for (const auto& t : cfg.t)
            weight = weight * (cfg.q[j] - t);
        S bracket = p_eff[j];
        for (int l = 0; l < N; ++l)
            if (l != j)
                bracket = bracket + S(1) / (cfg.q[j] - cfg.q[l]);
        for (const auto& t : cfg.t)
            bracket = bracket - S(2) / (cfg.q[j] - t);
        total = total + weight * bracket;
    }
    return total;
}

template <class S>
ChiPhi<S> chi_phi_factorization(const ProblemConfig<S>& cfg)
{
    if (cfg.n != 3)
        throw Unsupported("chi/phi closed forms are stated for n = 3");
    auto c = derive_constants(cfg);
    ChiPhi<S> out{chi1(cfg), phi1(cfg, c.p_eff), sigma1_by_elimination(cfg)};
    out.matches = out.chi * out.phi == out.sigma;
    if (!out.matches)
        throw FactorizationMismatch("sigma_1 != chi_1 phi_1");
    return out;
}

// sigma_k for the augmented matrix M_b = [b | M1] (k = 2 .. size + 1): the
// Cramer numerator det(M1 with column k-2 replaced by b), i.e. (-1)^k det M_k.
template <class S>
S sigma_minor(const AssembledSystem<S>& sys, int k)
{
    const int size = sys.layout.size();
    if (k < 2 || k > size + 1)
        throw DimensionMismatch("minor index k must lie in 2.." + std::to_string(size + 1));
    Matrix<S> M = sys.t_matrix;
    M.col(k - 2) = sys.t_rhs;
    return det(M);
}

template <class S>
std::map<int, S> sigma_minors(const ProblemConfig<S>& cfg)
{
    auto sys = build_t_system(cfg);
    std::map<int, S> out;
    out[1] = det(sys.t_matrix);
    for (int k = 2; k <= sys.layout.size() + 1; ++k)
        out[k] = sigma_minor(sys, k);
    return out;
}

inline std::string minor_unknown(const Layout& L, int k) { return L.column_label(k - 2); }

// sigma_f: signed cofactor of M1 at the first common row and column H_{8n-13}.
template <class S>
S sigma_f_by_elimination(const ProblemConfig<S>& cfg)
{
    auto sys = build_t_system(cfg);
    const Layout& L = sys.layout;
    const Index r = L.common(0), col = L.h_col(L.h_unknowns() - 2), size = L.size();
    Matrix<S> M(size - 1, size - 1);
    for (Index i = 0, ii = 0; i < size; ++i) {
        if (i == r)
            continue;
        for (Index j = 0, jj = 0; j < size; ++j)
            if (j != col)
                M(ii, jj++) = sys.t_matrix(i, j);
        ++ii;
    }
    S d = det(M);
    return (r + col) % 2 == 0 ? d : -d;
}

template <class S>
struct SigmaFBlocks {
    S det_R, det_S, value;
};

// n = 3 only: the minor is block triangular with a confluent Vandermonde
// upper block (t simple, q double) and the I-block of J = {1}.
template <class S>
SigmaFBlocks<S> sigma_f_by_blocks(const ProblemConfig<S>& cfg)
{
    if (cfg.n != 3)
        throw Unsupported("block form of sigma_f is specific to n = 3");
    auto c = derive_constants(cfg);
    const Layout L(cfg.n);
    const int n = cfg.n, N = cfg.N();
    // Leading row sits at (0, last column) of the 12x12 block: sign (-1)^{11}.
    NodeSpec<S> rspec = detail::point_spec(cfg, std::vector<int>(static_cast<size_t>(N), 2), false);
    RowSequence rseq;
    for (int i = 0; i < n; ++i)
        rseq.push_back({i, 0});
    for (int order = 0; order <= 1; ++order)
        for (int j = 0; j < N; ++j)
            rseq.push_back({n + j, order});
    SigmaFBlocks<S> out;
    out.det_R = -S(inversion_sign(rseq)) * confvand_det(rspec);
    S nu_sq(1);
    for (int l = 1; l < N; ++l)
        nu_sq = nu_sq * c.nu[l] * c.nu[l];
    out.det_S = nu_sq * detail::reduced_s_block(cfg, c, {0}, static_cast<BlockExpansionTerm<S>*>(nullptr));
    const int r = L.common(0), col = L.h_col(L.h_unknowns() - 2);
    out.value = S((r + col) % 2 == 0 ? 1 : -1) * out.det_R * out.det_S;
    return out;
}

template <class S>
S chi_f(const ProblemConfig<S>& cfg)
{
    S v(1);
    for (int a = 0; a < cfg.n; ++a)
        for (int b = a + 1; b < cfg.n; ++b)
            v = v * ipow(cfg.t[a] - cfg.t[b], 2);
    for (const auto& t : cfg.t)
        v = v * (t - cfg.q[0]);
    for (int j = 1; j < cfg.N(); ++j)
        v = v * ipow(cfg.q[0] - cfg.q[j], 6);
    for (int a = 1; a < cfg.N(); ++a)
        for (int b = a + 1; b < cfg.N(); ++b)
            v = v * ipow(cfg.q[a] - cfg.q[b], 8);
    return v;
}

template <class S>
S phi_f(const ProblemConfig<S>& cfg, const S& p1)
{
    const S& q1 = cfg.q[0];
    S qprod(1), tprod(1), tpairs(0), qpairs(0);
    for (int j = 1; j < cfg.N(); ++j)
        qprod = qprod * (q1 - cfg.q[j]);
    for (const auto& t : cfg.t)
        tprod = tprod * (q1 - t);
    for (int a = 0; a < cfg.n; ++a)
        for (int b = a + 1; b < cfg.n; ++b)
            tpairs = tpairs + (q1 - cfg.t[a]) * (q1 - cfg.t[b]);
    for (int a = 1; a < cfg.N(); ++a)
        for (int b = a + 1; b < cfg.N(); ++b)
            qpairs = qpairs + (q1 - cfg.q[a]) * (q1 - cfg.q[b]);
    return S(2) * qprod * tpairs - tprod * (qpairs + p1 * qprod);
}

template <class S>
struct SigmaFReport {
    S by_elimination, by_blocks, chi, phi;
    bool matches = false;
};

template <class S>
SigmaFReport<S> sigma_f_minor(const ProblemConfig<S>& cfg)
{
    auto c = derive_constants(cfg);
    SigmaFReport<S> r{sigma_f_by_elimination(cfg), sigma_f_by_blocks(cfg).value, chi_f(cfg),
                      phi_f(cfg, c.p_eff[0])};
    r.matches = r.by_elimination == r.by_blocks && r.by_blocks == r.chi * r.phi;
    if (!r.matches)
        throw FactorizationMismatch("sigma_f: elimination, blocks and chi_f phi_f disagree");
    return r;
}

// ---- degree probing -------------------------------------------------------

struct DegreeProbe {
    int degree = -1;
    Rational leading;
    Poly<Rational> poly;
    bool saturated = false;  // degree reached samples - 1: more samples needed
};

DegreeProbe degree_probe(const std::function<Rational(const Rational&)>& f, int samples,
                         const std::vector<Rational>& avoid = {}, int extra = 2);

// Copy of cfg with one named coordinate ("t1", "q2", "p3", ...) replaced.
template <class S>
ProblemConfig<S> with_variable(ProblemConfig<S> cfg, const std::string& var, const S& value)
{
    if (var.size() < 2)
        throw InvalidConfig("unknown variable '" + var + "'");
    int idx = std::stoi(var.substr(1)) - 1;
    std::vector<S>* target = var[0] == 't' ? &cfg.t : var[0] == 'q' ? &cfg.q : var[0] == 'p' ? &cfg.p : nullptr;
    if (!target || idx < 0 || idx >= static_cast<int>(target->size()))
        throw InvalidConfig("unknown variable '" + var + "'");
    (*target)[idx] = value;
    return cfg;
}

// Sample points of the variable must avoid coincidences with other points.
std::vector<Rational> forbidden_values(const ProblemConfig<Rational>& cfg, const std::string& var);

} // namespace fuchs3
