#include "mahler/sequences.hpp"

#include <bit>
#include <stdexcept>

namespace mahler {

int sequence_bit(SequenceKind kind, std::uint64_t n) {
    switch (kind) {
        case SequenceKind::ThueMorse:
            return std::popcount(n) & 1;
        case SequenceKind::Paperfolding:
            while (n & 1) n >>= 1;
            return (n & 3) == 0 ? 1 : 0;
        case SequenceKind::Cantor:
            while (n) {
                if (n % 3 == 1) return 0;
                n /= 3;
            }
            return 1;
    }
    throw std::invalid_argument("unknown sequence kind");
}

std::vector<int> sequence_prefix(SequenceKind kind, std::size_t N) {
    if (N < 1) throw std::invalid_argument("prefix length must be >= 1");
    std::vector<int> out(N);
    for (std::size_t i = 0; i < N; ++i) out[i] = sequence_bit(kind, i);
    return out;
}

std::string sequence_name(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::ThueMorse: return "thue-morse";
        case SequenceKind::Paperfolding: return "paperfolding";
        case SequenceKind::Cantor: return "cantor";
    }
    return "?";
}

std::optional<SequenceKind> parse_sequence_kind(const std::string& name) {
    if (name == "thue-morse" || name == "thuemorse" || name == "tm")
        return SequenceKind::ThueMorse;
    if (name == "paperfolding" || name == "rpf") return SequenceKind::Paperfolding;
    if (name == "cantor") return SequenceKind::Cantor;
    return std::nullopt;
}

}  // namespace mahler
