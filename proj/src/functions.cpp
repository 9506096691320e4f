#include "mahler/functions.hpp"

#include <stdexcept>

#include "mahler/sequences.hpp"

namespace mahler {

FunctionId FunctionId::T(int d) {
    if (d < 2) throw std::invalid_argument("T requires d >= 2");
    return FunctionId(Tag::T, d);
}

FunctionId FunctionId::U(int d) {
    if (d < 2) throw std::invalid_argument("U requires d >= 2");
    return FunctionId(Tag::U, d);
}

FunctionId FunctionId::G(int d, int j) {
    if (d < 2) throw std::invalid_argument("G requires d >= 2");
    if (j < 0) throw std::invalid_argument("G requires j >= 0");
    return FunctionId(Tag::G, d, j);
}

std::string FunctionId::name() const {
    switch (tag_) {
        case Tag::T: return "T" + std::to_string(d_);
        case Tag::U: return "U" + std::to_string(d_);
        case Tag::G: return "G" + std::to_string(d_) + "." + std::to_string(j_);
        case Tag::fTMM: return "fTMM";
        case Tag::fRPF: return "fRPF";
        case Tag::fC: return "fC";
        case Tag::Fcoons: return "F";
        case Tag::Gcoons: return "Gcoons";
    }
    return "?";
}

std::optional<FunctionId> FunctionId::parse(const std::string& name) {
    if (name == "fTMM") return fTMM();
    if (name == "fRPF") return fRPF();
    if (name == "fC") return fC();
    if (name == "F" || name == "Fcoons") return Fcoons();
    if (name == "Gcoons") return Gcoons();
    if (name.size() < 2) return std::nullopt;
    try {
        if (name[0] == 'T') return T(std::stoi(name.substr(1)));
        if (name[0] == 'U') return U(std::stoi(name.substr(1)));
        if (name[0] == 'G') {
            auto dot = name.find('.');
            if (dot == std::string::npos || dot < 2) return std::nullopt;
            return G(std::stoi(name.substr(1, dot - 1)), std::stoi(name.substr(dot + 1)));
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

namespace {

// d^e, clamped to limit+1 so callers can test "exceeds limit" without overflow.
long saturating_pow(long d, int e, long limit) {
    long v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > limit / d) return limit + 1;
        v *= d;
    }
    return v;
}

TruncatedSeries product_series(long N, long d, long first_exp, const Rational& sign) {
    // prod (1 + sign*z^e) over e = first_exp*d^n; factors with e > N are
    // 1 + O(z^(N+1)) and cannot affect the truncation.
    TruncatedSeries s(N);
    s.coeff_mut(0) = 1;
    for (long e = first_exp; e <= N; e *= d) {
        s.mul_binomial(e, sign);
        if (e > N / d) break;
    }
    return s;
}

TruncatedSeries lacunary_sum_series(long N, long d, int j, bool alternating) {
    // sum_n z^(d^n) / (1 -+ z^(d^(n+j))) expanded termwise.
    TruncatedSeries s(N);
    for (long e = 1; e <= N; e *= d) {  // e = d^n
        // step for this term is d^(n+j) = e * d^j
        long dj = saturating_pow(d, j, N);
        long term_step = (dj > N || e > N / dj) ? N + 1 : e * dj;
        Rational c(1);
        for (long k = e; k <= N; k += term_step) {
            s.coeff_mut(k) += c;
            if (alternating) c = -c;
            if (term_step > N - k) break;
        }
        if (e > N / d) break;
    }
    return s;
}

TruncatedSeries sequence_series(long N, SequenceKind kind) {
    TruncatedSeries s(N);
    for (long n = 0; n <= N; ++n)
        s.coeff_mut(n) = sequence_bit(kind, static_cast<std::uint64_t>(n));
    return s;
}

}  // namespace

TruncatedSeries series_of(const FunctionId& f, long N) {
    if (N < 1) throw std::invalid_argument("series order must be >= 1");
    switch (f.tag()) {
        case FunctionId::Tag::T:
            return product_series(N, f.d(), 1, Rational(-1));
        case FunctionId::Tag::U:
            return product_series(N, f.d(), 2, Rational(1));
        case FunctionId::Tag::G:
            return lacunary_sum_series(N, f.d(), f.j(), /*alternating=*/false);
        case FunctionId::Tag::fTMM:
            return sequence_series(N, SequenceKind::ThueMorse);
        case FunctionId::Tag::fRPF:
            return sequence_series(N, SequenceKind::Paperfolding);
        case FunctionId::Tag::fC:
            return sequence_series(N, SequenceKind::Cantor);
        case FunctionId::Tag::Fcoons:
            return lacunary_sum_series(N, 2, 0, /*alternating=*/true);
        case FunctionId::Tag::Gcoons:
            return lacunary_sum_series(N, 2, 0, /*alternating=*/false);
    }
    throw std::invalid_argument("unknown function");
}

bool verify_functional_equation(const FunctionId& f, long N) {
    if (N < 1) throw std::invalid_argument("order must be >= 1");
    if (!f.is_family())
        throw std::invalid_argument("no substitution equation for " + f.name() +
                                    "; use the bridge identities");
    TruncatedSeries s = series_of(f, N);
    TruncatedSeries sub = substitute_power(s, static_cast<unsigned>(f.d()));
    switch (f.tag()) {
        case FunctionId::Tag::T:
            sub.mul_binomial(1, Rational(-1));
            return sub == s;
        case FunctionId::Tag::U:
            if (N >= 2) sub.mul_binomial(2, Rational(1));
            return sub == s;
        case FunctionId::Tag::G: {
            long dj = 1;
            bool overflow = false;
            for (int i = 0; i < f.j(); ++i) {
                if (dj > N / f.d()) { overflow = true; break; }
                dj *= f.d();
            }
            // z/(1 - z^(d^j)); for d^j > N only the leading z survives.
            TruncatedSeries rhs_term =
                overflow ? TruncatedSeries::geometric(N, 1, N + 1)
                         : TruncatedSeries::geometric(N, 1, dj);
            return sub == s - rhs_term;
        }
        default: break;
    }
    return false;
}

bool verify_bridge_identity(BridgeId id, long N) {
    if (N < 1) throw std::invalid_argument("order must be >= 1");
    switch (id) {
        case BridgeId::TMM_bridge: {
            TruncatedSeries ones = TruncatedSeries::geometric(N, 0, 1);
            return series_of(FunctionId::T(2), N) ==
                   ones - series_of(FunctionId::fTMM(), N) * Rational(2);
        }
        case BridgeId::RPF_bridge:
            return series_of(FunctionId::G(2, 2), N) ==
                   series_of(FunctionId::fRPF(), N).shift_up(1);
        case BridgeId::Cantor_bridge:
            return series_of(FunctionId::U(3), N) == series_of(FunctionId::fC(), N);
        case BridgeId::G21_rational:
            return series_of(FunctionId::G(2, 1), N) ==
                   TruncatedSeries::geometric(N, 1, 1);
        case BridgeId::U2_rational:
            return series_of(FunctionId::U(2), N) ==
                   TruncatedSeries::geometric(N, 0, 2);
        case BridgeId::Fcoons_bridge:
            return series_of(FunctionId::Fcoons(), N) ==
                   TruncatedSeries::geometric(N, 1, 1, Rational(2)) -
                       series_of(FunctionId::Gcoons(), N);
    }
    throw std::invalid_argument("unknown bridge identity");
}

std::string bridge_name(BridgeId id) {
    switch (id) {
        case BridgeId::TMM_bridge: return "TMM_bridge";
        case BridgeId::RPF_bridge: return "RPF_bridge";
        case BridgeId::Cantor_bridge: return "Cantor_bridge";
        case BridgeId::G21_rational: return "G21_rational";
        case BridgeId::U2_rational: return "U2_rational";
        case BridgeId::Fcoons_bridge: return "Fcoons_bridge";
    }
    return "?";
}

std::optional<BridgeId> parse_bridge_id(const std::string& name) {
    for (BridgeId id : {BridgeId::TMM_bridge, BridgeId::RPF_bridge,
                        BridgeId::Cantor_bridge, BridgeId::G21_rational,
                        BridgeId::U2_rational, BridgeId::Fcoons_bridge})
        if (bridge_name(id) == name) return id;
    return std::nullopt;
}

}  // namespace mahler
