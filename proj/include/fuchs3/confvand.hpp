#pragma once

#include <vector>

#include "fuchs3/matrix.hpp"
#include "fuchs3/rational.hpp"

namespace fuchs3 {

// Nodes x_i with multiplicities n_i. With leading_row set, one extra row
// e_{w-1} (the "1" parameter, selecting the top coefficient) precedes all
// node rows in the standard sequence.
template <class S>
struct NodeSpec {
    std::vector<S> x;
    std::vector<int> multiplicity;
    bool leading_row = false;

    void add(const S& node, int mult)
    {
        x.push_back(node);
        multiplicity.push_back(mult);
    }
    int size() const
    {
        int n = leading_row ? 1 : 0;
        for (int m : multiplicity)
            n += m;
        return n;
    }
};

struct RowRef {
    static constexpr int leading = -1;
    int node = leading;
    int order = 0;

    friend bool operator==(const RowRef&, const RowRef&) = default;
    // The total order whose ascending sequence is the standard sequence.
    friend bool operator<(const RowRef& a, const RowRef& b)
    {
        return a.node != b.node ? a.node < b.node : a.order < b.order;
    }
};

using RowSequence = std::vector<RowRef>;

template <class S>
RowSequence standard_sequence(const NodeSpec<S>& spec)
{
    RowSequence seq;
    if (spec.leading_row)
        seq.push_back({RowRef::leading, 0});
    for (int i = 0; i < static_cast<int>(spec.x.size()); ++i)
        for (int k = 0; k < spec.multiplicity[i]; ++k)
            seq.push_back({i, k});
    return seq;
}

// k-th derivative of (1, x, ..., x^{w-1}) divided by k!.
template <class S>
std::vector<S> vandermonde_row(const S& x, int k, int width)
{
    std::vector<S> row(static_cast<size_t>(width), S(0));
    if (k >= width)
        return row;
    S power(1);
    for (int j = k; j < width; ++j) {
        row[j] = S(binomial(j, k)) * power;
        power = power * x;
    }
    return row;
}

template <class S>
Matrix<S> build_confvand(const NodeSpec<S>& spec, const RowSequence& seq, int width = -1)
{
    if (width < 0)
        width = spec.size();
    for (size_t i = 0; i < spec.x.size(); ++i)
        for (size_t j = i + 1; j < spec.x.size(); ++j)
            if (spec.x[i] == spec.x[j])
                throw DuplicateNode("nodes " + std::to_string(i) + " and " + std::to_string(j));
    Matrix<S> M = Matrix<S>::Constant(static_cast<Index>(seq.size()), width, S(0));
    for (size_t r = 0; r < seq.size(); ++r) {
        const RowRef& ref = seq[r];
        if (ref.node == RowRef::leading) {
            M(static_cast<Index>(r), width - 1) = S(1);
            continue;
        }
        auto row = vandermonde_row(spec.x[ref.node], ref.order, width);
        for (int j = 0; j < width; ++j)
            M(static_cast<Index>(r), j) = row[j];
    }
    return M;
}

// prod_{i<j} (x_j - x_i)^{n_i n_j}, times (-1)^{w-1} for the leading row.
template <class S>
S confvand_det(const NodeSpec<S>& spec)
{
    S d(1);
    const size_t m = spec.x.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            S diff = spec.x[j] - spec.x[i];
            for (int e = spec.multiplicity[i] * spec.multiplicity[j]; e > 0; --e)
                d = d * diff;
        }
    if (spec.leading_row && spec.size() % 2 == 0)
        d = -d;
    return d;
}

long inversion_count(const RowSequence& seq);
int inversion_sign(const RowSequence& seq);

// d/dx_a log confvand_det
template <class S>
S confvand_log_derivative(const NodeSpec<S>& spec, int a)
{
    S sum(0);
    for (int o = 0; o < static_cast<int>(spec.x.size()); ++o)
        if (o != a)
            sum = sum + S(spec.multiplicity[a] * spec.multiplicity[o]) / (spec.x[a] - spec.x[o]);
    return sum;
}

namespace detail {

// Sum over partial matchings of `nodes`: pairs contribute the mixed second
// log-derivative, singletons the first.
template <class S>
S matching_sum(const NodeSpec<S>& spec, std::vector<int> nodes)
{
    if (nodes.empty())
        return S(1);
    int a = nodes.front();
    nodes.erase(nodes.begin());
    S total = confvand_log_derivative(spec, a) * matching_sum(spec, nodes);
    for (size_t i = 0; i < nodes.size(); ++i) {
        int b = nodes[i];
        S diff = spec.x[a] - spec.x[b];
        S lab = S(spec.multiplicity[a] * spec.multiplicity[b]) / (diff * diff);
        std::vector<int> rest = nodes;
        rest.erase(rest.begin() + static_cast<long>(i));
        total = total + lab * matching_sum(spec, rest);
    }
    return total;
}

} // namespace detail

// Mixed partial derivative of confvand_det with respect to distinct nodes.
template <class S>
S confvand_det_partial(const NodeSpec<S>& spec, const std::vector<int>& nodes)
{
    return confvand_det(spec) * detail::matching_sum(spec, nodes);
}

} // namespace fuchs3
