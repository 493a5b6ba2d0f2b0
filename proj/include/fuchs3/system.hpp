#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fuchs3/confvand.hpp"
#include "fuchs3/constants.hpp"
#include "fuchs3/laurent.hpp"
#include "fuchs3/matrix.hpp"
#include "fuchs3/poly.hpp"

namespace fuchs3 {

// Row and column positions of system (T). Points are 0-based here.
struct Layout {
    int n = 0, N = 0;

    explicit Layout(int n_) : n(n_), N(3 * n_ - 5) {}

    int h_unknowns() const { return 8 * n - 11; }
    int i_unknowns() const { return 12 * n - 17; }
    int size() const { return 20 * n - 28; }
    int g_unknowns() const { return 4 * n - 5; }

    int h_col(int k) const { return k; }
    int i_col(int k) const { return h_unknowns() + k; }

    int ht0() const { return 0; }
    int hti(int i) const { return 1 + i; }
    int hqj(int j) const { return 1 + n + j; }
    int hqj_second(int j) const { return 1 + n + N + j; }
    int common(int j) const { return 1 + n + 2 * N + j; }
    int it0() const { return 1 + n + 3 * N; }
    int iti(int i) const { return it0() + 1 + i; }
    int iqj(int j) const { return it0() + 1 + n + j; }
    int iqj_second(int j) const { return it0() + 1 + n + N + j; }
    int iqj_third(int j) const { return it0() + 1 + n + 2 * N + j; }
    // Rows that involve only H unknowns.
    int h_rows() const { return common(0); }

    std::string column_label(int c) const
    {
        return c < h_unknowns() ? "H" + std::to_string(c) : "I" + std::to_string(c - h_unknowns());
    }
    std::vector<std::string> column_labels() const;
    std::vector<std::string> row_labels() const;
};

template <class S>
struct LinearBlock {
    Matrix<S> matrix;
    Vector<S> rhs;
};

template <class S>
struct AssembledSystem {
    Layout layout{2};
    LinearBlock<S> g_block;  // rows gt0, gt_i, gq_j; unknowns G_0..G_{4n-6}
    Matrix<S> t_matrix;
    Vector<S> t_rhs;
    std::vector<std::string> column_labels;
    std::vector<std::string> row_labels;
};

template <class S>
struct FuchsianEquation {
    Poly<S> G, H, I, psi;
};

template <class S>
Poly<S> psi_polynomial(const ProblemConfig<S>& cfg)
{
    std::vector<S> roots = cfg.t;
    roots.insert(roots.end(), cfg.q.begin(), cfg.q.end());
    return Poly<S>::from_roots(roots);
}

inline int g_top_degree(int n) { return 4 * n - 6; }

template <class S>
LinearBlock<S> build_g_system(const ProblemConfig<S>& cfg, const DerivedConstants<S>& c)
{
    Layout L(cfg.n);
    const int w = L.g_unknowns();
    LinearBlock<S> g{Matrix<S>::Constant(1 + cfg.n + cfg.N(), w, S(0)),
                     Vector<S>::Constant(1 + cfg.n + cfg.N(), S(0))};
    g.matrix(0, w - 1) = S(1);
    g.rhs(0) = S(3) - c.alpha[0];
    for (int i = 0; i < cfg.n; ++i) {
        auto row = vandermonde_row(cfg.t[i], 0, w);
        for (int k = 0; k < w; ++k)
            g.matrix(1 + i, k) = row[k];
        g.rhs(1 + i) = (S(3) - c.alpha[i + 1]) / c.lambda[i];
    }
    for (int j = 0; j < cfg.N(); ++j) {
        auto row = vandermonde_row(cfg.q[j], 0, w);
        for (int k = 0; k < w; ++k)
            g.matrix(1 + cfg.n + j, k) = row[k];
        g.rhs(1 + cfg.n + j) = S(-1) / c.eta[j];
    }
    return g;
}

// Drops the top-coefficient row, solves the square Vandermonde system and
// checks the dropped row on the result.
template <class S>
Poly<S> solve_g(const ProblemConfig<S>& cfg, const DerivedConstants<S>& c)
{
    LinearBlock<S> g = build_g_system(cfg, c);
    const Index rows = g.matrix.rows();
    Matrix<S> A = g.matrix.bottomRows(rows - 1);
    Vector<S> b = g.rhs.tail(rows - 1);
    Solution<S> sol;
    try {
        sol = solve(A, b);
    }
    catch (const Inconsistent& e) {
        throw SingularGBlock(e.what());
    }
    if (!sol.basis.empty())
        throw SingularGBlock("G block is rank deficient");
    std::vector<S> coeffs(sol.particular.data(), sol.particular.data() + sol.particular.size());
    Poly<S> G(coeffs);
    if (!(G.coeff(g_top_degree(cfg.n)) == g.rhs(0)))
        throw InvalidConfig("G block: leading coefficient " + to_string(G.coeff(g_top_degree(cfg.n))) +
                            " differs from 3 - alpha_0 (Fuchs relation)");
    return G;
}

template <class S>
AssembledSystem<S> build_t_system(const ProblemConfig<S>& cfg, const DerivedConstants<S>& c)
{
    require_valid(cfg);
    const Layout L(cfg.n);
    const int n = cfg.n, N = cfg.N(), wH = L.h_unknowns(), wI = L.i_unknowns();
    AssembledSystem<S> sys;
    sys.layout = L;
    sys.g_block = build_g_system(cfg, c);
    sys.t_matrix = Matrix<S>::Constant(L.size(), L.size(), S(0));
    sys.t_rhs = Vector<S>::Constant(L.size(), S(0));
    sys.column_labels = L.column_labels();
    sys.row_labels = L.row_labels();
    Matrix<S>& M = sys.t_matrix;
    Vector<S>& b = sys.t_rhs;

    auto put_h = [&](int r, const S& x, int order, const S& scale) {
        auto row = vandermonde_row(x, order, wH);
        for (int k = 0; k < wH; ++k)
            if (!is_zero(row[k]))
                M(r, L.h_col(k)) = scale * row[k];
    };
    auto put_i = [&](int r, const S& x, int order, const S& scale) {
        auto row = vandermonde_row(x, order, wI);
        for (int k = 0; k < wI; ++k)
            if (!is_zero(row[k]))
                M(r, L.i_col(k)) = M(r, L.i_col(k)) + scale * row[k];
    };

    M(L.ht0(), L.h_col(wH - 1)) = S(1);
    b(L.ht0()) = c.beta[0] - c.alpha[0] + S(1);
    for (int i = 0; i < n; ++i) {
        put_h(L.hti(i), cfg.t[i], 0, S(1));
        b(L.hti(i)) = (c.beta[i + 1] - c.alpha[i + 1] + S(1)) / (c.lambda[i] * c.lambda[i]);
    }
    for (int j = 0; j < N; ++j) {
        put_h(L.hqj(j), cfg.q[j], 0, S(1));
        put_h(L.hqj_second(j), cfg.q[j], 1, S(1));
        b(L.hqj_second(j)) = cfg.p[j] / c.mu[j];
        put_h(L.common(j), cfg.q[j], 2, c.mu[j]);
        put_i(L.common(j), cfg.q[j], 2, c.nu[j]);
        b(L.common(j)) = -cfg.p[j] * c.p_eff[j] - c.mu_tilde[j] / c.mu[j] * cfg.p[j];
    }
    M(L.it0(), L.i_col(wI - 1)) = S(1);
    b(L.it0()) = -c.gamma[0];
    for (int i = 0; i < n; ++i) {
        put_i(L.iti(i), cfg.t[i], 0, S(1));
        b(L.iti(i)) = -c.gamma[i + 1] / (c.lambda[i] * c.lambda[i] * c.lambda[i]);
    }
    for (int j = 0; j < N; ++j) {
        put_i(L.iqj(j), cfg.q[j], 0, S(1));
        put_i(L.iqj_second(j), cfg.q[j], 1, S(1));
        put_i(L.iqj_third(j), cfg.q[j], 2, c.omega[j]);
        put_i(L.iqj_third(j), cfg.q[j], 3, c.nu[j]);
    }
    return sys;
}

template <class S>
AssembledSystem<S> build_t_system(const ProblemConfig<S>& cfg)
{
    return build_t_system(cfg, derive_constants(cfg));
}

template <class S>
FuchsianEquation<S> equation_from_unknowns(const ProblemConfig<S>& cfg, const Poly<S>& G, const Vector<S>& x)
{
    const Layout L(cfg.n);
    std::vector<S> h(x.data(), x.data() + L.h_unknowns());
    std::vector<S> i(x.data() + L.h_unknowns(), x.data() + x.size());
    return {G, Poly<S>(h), Poly<S>(i), psi_polynomial(cfg)};
}

// One-parameter solution set x(s) = particular + s * direction, where s is the
// value of the unknown in free_column.
template <class S>
struct AffineFamily {
    Vector<S> particular;
    Vector<S> direction;
    Index free_column = 0;
    std::string free_label;
    Poly<S> G;

    Vector<S> at(const S& s) const
    {
        Vector<S> x = particular;
        for (Index k = 0; k < x.size(); ++k)
            if (!is_zero(direction(k)))
                x(k) = x(k) + s * direction(k);
        return x;
    }
};

template <class S>
using ConnectionResult = std::variant<FuchsianEquation<S>, AffineFamily<S>>;

// Unique equation when system (T) is regular, a one-parameter family at
// corank one; Inconsistent off the solvable locus.
template <class S>
ConnectionResult<S> solve_connection(const ProblemConfig<S>& cfg)
{
    auto c = derive_constants(cfg);
    auto sys = build_t_system(cfg, c);
    Poly<S> G = solve_g(cfg, c);
    Solution<S> sol = solve(sys.t_matrix, sys.t_rhs);
    if (sol.basis.empty())
        return equation_from_unknowns(cfg, G, sol.particular);
    if (sol.basis.size() > 1)
        throw Unsupported("system (T) has corank " + std::to_string(sol.basis.size()));
    AffineFamily<S> fam;
    fam.particular = sol.particular;
    fam.direction = sol.basis[0];
    fam.free_column = sol.free_columns[0];
    fam.free_label = sys.layout.column_label(static_cast<int>(fam.free_column));
    fam.G = G;
    return fam;
}

// Recomputes every row of system (T) from Laurent data of the equation and
// returns (Laurent quantity - prescribed value), in row order. Independent of
// the matrix assembly.
template <class S>
std::vector<S> laurent_residuals(const FuchsianEquation<S>& eq, const ProblemConfig<S>& cfg)
{
    const Layout L(cfg.n);
    const int n = cfg.n, N = cfg.N();
    std::vector<S> res(static_cast<size_t>(L.size()), S(0));
    Poly<S> psi2 = eq.psi * eq.psi, psi3 = psi2 * eq.psi;
    auto c = derive_constants(cfg);

    res[L.ht0()] = eq.H.coeff(L.h_unknowns() - 1) - (c.beta[0] - c.alpha[0] + S(1));
    res[L.it0()] = eq.I.coeff(L.i_unknowns() - 1) + c.gamma[0];
    for (int i = 0; i < n; ++i) {
        auto h = laurent_jet_through(eq.H, psi2, cfg.t[i], -2);
        auto iv = laurent_jet_through(eq.I, psi3, cfg.t[i], -3);
        res[L.hti(i)] = h.at(-2) - (c.beta[i + 1] - c.alpha[i + 1] + S(1));
        res[L.iti(i)] = iv.at(-3) + c.gamma[i + 1];
    }
    for (int j = 0; j < N; ++j) {
        auto g = laurent_jet_through(eq.G, eq.psi, cfg.q[j], 0);
        auto h = laurent_jet_through(eq.H, psi2, cfg.q[j], 0);
        auto iv = laurent_jet_through(eq.I, psi3, cfg.q[j], 0);
        S G1 = g.at(0), H1 = h.at(-1), H2 = h.at(0);
        S I1 = iv.at(-2), I2 = iv.at(-1), I3 = iv.at(0);
        res[L.hqj(j)] = h.at(-2);
        res[L.hqj_second(j)] = H1 - cfg.p[j];
        res[L.common(j)] = H2 + I2 + G1 * H1 + H1 * H1;
        res[L.iqj(j)] = iv.at(-3);
        res[L.iqj_second(j)] = I1;
        res[L.iqj_third(j)] = (G1 + H1) * I2 + I3;
    }
    return res;
}

} // namespace fuchs3
