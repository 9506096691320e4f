#ifndef MAHLER_FUNCTIONS_HPP
#define MAHLER_FUNCTIONS_HPP

#include <optional>
#include <string>

#include "mahler/series.hpp"

namespace mahler {

// The function families under study. All are analytic on |z| < 1:
//
//   T(d)      = prod_{n>=0} (1 - z^(d^n))
//   U(d)      = prod_{n>=0} (1 + z^(2*d^n))
//   G(d,j)    = sum_{n>=0} z^(d^n) / (1 - z^(d^(n+j)))
//   fTMM      = sum t_n z^n   (Thue-Morse)
//   fRPF      = sum u_n z^n   (paperfolding)
//   fC        = sum v_n z^n   (Cantor)
//   Fcoons    = sum_{n>=0} z^(2^n) / (1 + z^(2^n))
//   Gcoons    = sum_{n>=0} z^(2^n) / (1 - z^(2^n))  (= G(2,0))
class FunctionId {
public:
    enum class Tag { T, U, G, fTMM, fRPF, fC, Fcoons, Gcoons };

    static FunctionId T(int d);
    static FunctionId U(int d);
    static FunctionId G(int d, int j);
    static FunctionId fTMM() { return FunctionId(Tag::fTMM); }
    static FunctionId fRPF() { return FunctionId(Tag::fRPF); }
    static FunctionId fC() { return FunctionId(Tag::fC); }
    static FunctionId Fcoons() { return FunctionId(Tag::Fcoons); }
    static FunctionId Gcoons() { return FunctionId(Tag::Gcoons); }

    Tag tag() const { return tag_; }
    int d() const { return d_; }
    int j() const { return j_; }

    // True for the T/U/G families that satisfy an equation linking
    // F(z) and F(z^d) with rational-function coefficients.
    bool is_family() const {
        return tag_ == Tag::T || tag_ == Tag::U || tag_ == Tag::G;
    }
    // Base of the z -> z^d substitution natural to this function.
    int base() const { return is_family() ? d_ : 2; }

    // Canonical name: "T2", "U3", "G2.2", "fTMM", "F", "Gcoons", ...
    std::string name() const;
    static std::optional<FunctionId> parse(const std::string& name);

    bool operator==(const FunctionId& o) const = default;

private:
    explicit FunctionId(Tag tag, int d = 0, int j = 0) : tag_(tag), d_(d), j_(j) {}
    Tag tag_;
    int d_;
    int j_;
};

// Exact expansion to order N (N >= 1): coefficients of z^0..z^N.
TruncatedSeries series_of(const FunctionId& f, long N);

// Checks the defining substitution identity to order N:
//   T(d):   T(z^d) * (1 - z)   = T(z)
//   U(d):   U(z^d) * (1 + z^2) = U(z)
//   G(d,j): G(z^d)             = G(z) - z/(1 - z^(d^j))
// Throws std::invalid_argument for functions outside the three families.
bool verify_functional_equation(const FunctionId& f, long N);

enum class BridgeId {
    TMM_bridge,      // T(2)    = 1/(1-z) - 2*fTMM
    RPF_bridge,      // G(2,2)  = z * fRPF
    Cantor_bridge,   // U(3)    = fC
    G21_rational,    // G(2,1)  = z/(1-z)
    U2_rational,     // U(2)    = 1/(1-z^2)
    Fcoons_bridge,   // Fcoons  = 2z/(1-z) - G(2,0)
};

bool verify_bridge_identity(BridgeId id, long N);

std::string bridge_name(BridgeId id);
std::optional<BridgeId> parse_bridge_id(const std::string& name);

}  // namespace mahler

#endif
