#ifndef MAHLER_SEQUENCES_HPP
#define MAHLER_SEQUENCES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mahler {

enum class SequenceKind { ThueMorse, Paperfolding, Cantor };

/// n-th term of the sequence, always 0 or 1.
///
/// ThueMorse:    t_0 = 0, t_{2n} = t_n, t_{2n+1} = 1 - t_n
///               (computed as the parity of the binary digit sum).
/// Paperfolding: u_{4n} = 1, u_{4n+2} = 0, u_{2n+1} = u_n
///               (computed by stripping trailing 1-bits).
/// Cantor:       v_n = 1 iff the ternary expansion of n avoids the digit 1.
int sequence_bit(SequenceKind kind, std::uint64_t n);

/// First N terms, N >= 1.
std::vector<int> sequence_prefix(SequenceKind kind, std::size_t N);

std::string sequence_name(SequenceKind kind);
std::optional<SequenceKind> parse_sequence_kind(const std::string& name);

}  // namespace mahler

#endif
