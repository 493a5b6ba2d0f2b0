#include "fuchs3/system.hpp"

namespace fuchs3 {

std::vector<std::string> Layout::column_labels() const
{
    std::vector<std::string> out;
    for (int c = 0; c < size(); ++c)
        out.push_back(column_label(c));
    return out;
}

std::vector<std::string> Layout::row_labels() const
{
    std::vector<std::string> out(static_cast<size_t>(size()));
    auto num = [](int k) { return std::to_string(k + 1); };
    out[ht0()] = "ht0";
    out[it0()] = "it0";
    for (int i = 0; i < n; ++i) {
        out[hti(i)] = "ht" + num(i);
        out[iti(i)] = "it" + num(i);
    }
    for (int j = 0; j < N; ++j) {
        out[hqj(j)] = "hq" + num(j);
        out[hqj_second(j)] = "hq" + num(j) + "'";
        out[common(j)] = "common" + num(j);
        out[iqj(j)] = "iq" + num(j);
        out[iqj_second(j)] = "iq" + num(j) + "'";
        out[iqj_third(j)] = "iq" + num(j) + "''";
    }
    return out;
}

} // namespace fuchs3
