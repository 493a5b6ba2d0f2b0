#include "fuchs3/confvand.hpp"

namespace fuchs3 {

long inversion_count(const RowSequence& seq)
{
    long count = 0;
    for (size_t a = 0; a < seq.size(); ++a)
        for (size_t b = a + 1; b < seq.size(); ++b)
            if (seq[b] < seq[a])
                ++count;
    return count;
}

int inversion_sign(const RowSequence& seq) { return inversion_count(seq) % 2 == 0 ? 1 : -1; }

} // namespace fuchs3
