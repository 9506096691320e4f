#include "mahler/evaluate.hpp"

#include "mahler/sequences.hpp"

namespace mahler {

EvalPoint::EvalPoint(Rational a) : alpha(std::move(a)) {
    if (alpha == 0 || abs(alpha) >= 1)
        throw std::invalid_argument("evaluation point must satisfy 0 < |alpha| < 1");
}

TailKind tail_kind(const FunctionId& f) {
    switch (f.tag()) {
        case FunctionId::Tag::T:
        case FunctionId::Tag::U:
            return TailKind::Product;
        default:
            return TailKind::Sum;
    }
}

namespace {

constexpr long kMaxTailIndex = 1 << 26;

// Smallest exponent of the first omitted term/factor when indices > N are
// dropped: d^(N+1) for T and the lacunary sums, 2*d^(N+1) for U.
// Exponents are clamped; anything past the clamp has a vanishing tail anyway.
Rational first_omitted_power(const FunctionId& f, const Rational& r, long N) {
    long d = f.base();
    Rational rE = pow(r, static_cast<unsigned long>(d));  // r^(d^1)
    for (long i = 0; i < N; ++i) rE = pow(rE, static_cast<unsigned long>(d));
    if (f.tag() == FunctionId::Tag::U) rE = rE * rE;
    return rE;
}

bool is_sequence_function(const FunctionId& f) {
    switch (f.tag()) {
        case FunctionId::Tag::fTMM:
        case FunctionId::Tag::fRPF:
        case FunctionId::Tag::fC:
            return true;
        default:
            return false;
    }
}

SequenceKind sequence_of(const FunctionId& f) {
    switch (f.tag()) {
        case FunctionId::Tag::fTMM: return SequenceKind::ThueMorse;
        case FunctionId::Tag::fRPF: return SequenceKind::Paperfolding;
        default: return SequenceKind::Cantor;
    }
}

}  // namespace

Rational tail_bound(TailKind kind, const FunctionId& f, const EvalPoint& p, long N) {
    if (N < 0) throw std::invalid_argument("tail index must be >= 0");
    Rational r = abs(p.alpha);
    if (kind == TailKind::Product) {
        if (tail_kind(f) != TailKind::Product)
            throw std::invalid_argument("product tail bound only applies to T and U");
        // |prod_{n>N} (1 +- alpha^(e_n)) - 1| <= exp(S) - 1 <= S + S^2 for
        // S <= 1/2, with S <= r^E / (1 - r^E), E the first omitted exponent.
        Rational rE = first_omitted_power(f, r, N);
        Rational S = rE / (1 - rE);
        if (S > Rational(1, 2))
            throw TailBoundError("omitted product mass exceeds 1/2 at N=" +
                                 std::to_string(N) + "; raise N");
        return S * (1 + S);
    }
    if (is_sequence_function(f)) {
        // Coefficients are 0/1: tail <= sum_{n>N} r^n = r^(N+1) / (1 - r).
        return pow(r, static_cast<unsigned long>(N) + 1) / (1 - r);
    }
    if (tail_kind(f) != TailKind::Sum)
        throw std::invalid_argument("sum tail bound does not apply to " + f.name());
    // Lacunary sums: numerators sum to at most r^E/(1 - r^E) and every
    // omitted denominator is at least 1 - r^E, with E = d^(N+1).
    Rational rE = first_omitted_power(f, r, N);
    Rational one_minus = 1 - rE;
    return rE / (one_minus * one_minus);
}

namespace {

// Exact partial sum of a 0/1-coefficient power series at alpha = p/q:
// integer Horner over the common denominator q^N.
Rational sequence_partial_sum(SequenceKind kind, const Rational& alpha, long N) {
    const Integer& p = alpha.get_num();
    const Integer& q = alpha.get_den();
    Integer acc(sequence_bit(kind, static_cast<std::uint64_t>(N)));
    Integer qpow(1);
    for (long n = N - 1; n >= 0; --n) {
        qpow *= q;
        acc *= p;
        if (sequence_bit(kind, static_cast<std::uint64_t>(n))) acc += qpow;
    }
    Rational out(acc);
    out /= Rational(qpow);
    return out;
}

struct LacunaryParams {
    long d;
    int j;
    Rational denom_sign;  // +1 for 1 - z^k denominators, -1 for 1 + z^k
};

LacunaryParams lacunary_params(const FunctionId& f) {
    switch (f.tag()) {
        case FunctionId::Tag::G: return {f.d(), f.j(), Rational(1)};
        case FunctionId::Tag::Fcoons: return {2, 0, Rational(-1)};
        case FunctionId::Tag::Gcoons: return {2, 0, Rational(1)};
        default: throw std::invalid_argument("not a lacunary sum: " + f.name());
    }
}

// Head of a lacunary sum: sum_{n<=N} alpha^(d^n) / (1 -+ alpha^(d^(n+j))).
// Denominator exponents beyond cap_exp are replaced by the enclosure
// [-cap_pow, cap_pow] (cap_pow >= r^cap_exp), keeping bignum sizes bounded.
BallReal lacunary_head(const FunctionId& f, const Rational& alpha, long N,
                       unsigned long cap_exp, const Rational& cap_pow) {
    LacunaryParams lp = lacunary_params(f);
    BallReal total = BallReal::exact(Rational(0));
    Rational outer = alpha;  // alpha^(d^n)
    for (long n = 0; n <= N; ++n) {
        // exponent of the denominator power: d^(n+j), saturated against cap
        unsigned long e2 = 1;
        bool capped = false;
        for (long i = 0; i < n + lp.j; ++i) {
            if (e2 > cap_exp / static_cast<unsigned long>(lp.d)) {
                capped = true;
                break;
            }
            e2 *= static_cast<unsigned long>(lp.d);
        }
        BallReal denom_pow = capped ? BallReal(Rational(0), cap_pow)
                                    : BallReal::exact(pow(alpha, e2));
        BallReal denom = (denom_pow * (-lp.denom_sign)) + Rational(1);
        total = total + denom.inverse() * outer;
        if (n < N) outer = pow(outer, static_cast<unsigned long>(lp.d));
    }
    return total;
}

}  // namespace

BallReal eval(const FunctionId& f, const EvalPoint& p, unsigned long prec_bits) {
    if (prec_bits < 8) throw std::invalid_argument("precision must be >= 8 bits");
    const Rational target = pow2(-static_cast<long>(prec_bits) - 2);
    const Rational r = abs(p.alpha);

    BallReal result;
    if (is_sequence_function(f)) {
        SequenceKind kind = sequence_of(f);
        // least N with r^(N+1)/(1-r) <= target
        Rational bound = r / (1 - r);
        long N = 0;
        while (bound > target) {
            bound *= r;
            ++N;
            if (N > kMaxTailIndex) throw TailBoundError("tail does not shrink");
        }
        result = BallReal(sequence_partial_sum(kind, p.alpha, N), bound);
    } else if (tail_kind(f) == TailKind::Sum) {
        long N = 0;
        while (tail_bound(TailKind::Sum, f, p, N) > target) ++N;
        // Denominator powers below ~2^-(prec+8) in magnitude are enclosed
        // rather than computed exactly.
        Rational cap_threshold = target * pow2(-6);
        unsigned long cap_exp = 1;
        Rational cap_pow = r;
        while (cap_pow > cap_threshold) {
            cap_pow = cap_pow * cap_pow;
            cap_exp *= 2;
        }
        BallReal head = lacunary_head(f, p.alpha, N, cap_exp, cap_pow);
        result = head.widened(tail_bound(TailKind::Sum, f, p, N));
    } else {
        // Products T(d), U(d).
        long d = f.d();
        long N = 0;
        while (true) {
            try {
                if (tail_bound(TailKind::Product, f, p, N) <= target) break;
            } catch (const TailBoundError&) {
            }
            ++N;
        }
        bool is_T = f.tag() == FunctionId::Tag::T;
        Rational head(1);
        Rational factor_pow = is_T ? p.alpha : p.alpha * p.alpha;  // alpha^(e_0)
        for (long n = 0; n <= N; ++n) {
            head *= is_T ? Rational(1 - factor_pow) : Rational(1 + factor_pow);
            if (n < N) factor_pow = pow(factor_pow, static_cast<unsigned long>(d));
        }
        Rational tb = tail_bound(TailKind::Product, f, p, N);
        while (abs(head) * tb > target) {
            ++N;
            factor_pow = pow(factor_pow, static_cast<unsigned long>(d));
            head *= is_T ? Rational(1 - factor_pow) : Rational(1 + factor_pow);
            tb = tail_bound(TailKind::Product, f, p, N);
        }
        result = BallReal(head, abs(head) * tb);
    }

    if (bit_size(result.mid()) > 4 * prec_bits)
        result = result.compressed(prec_bits + 3);
    if (result.rad() > pow2(-static_cast<long>(prec_bits)))
        throw std::logic_error("enclosure radius exceeds 2^-prec for " + f.name());
    return result;
}

bool has_bridge_partner(const FunctionId& f) {
    switch (f.tag()) {
        case FunctionId::Tag::fTMM:
        case FunctionId::Tag::fRPF:
        case FunctionId::Tag::fC:
        case FunctionId::Tag::Fcoons:
        case FunctionId::Tag::Gcoons:
            return true;
        default:
            return false;
    }
}

std::pair<BallReal, BallReal> eval_two_routes(const FunctionId& f, const EvalPoint& p,
                                              unsigned long prec_bits) {
    if (!has_bridge_partner(f))
        throw std::invalid_argument("no bridge identity for " + f.name());
    BallReal direct = eval(f, p, prec_bits);
    const Rational& a = p.alpha;
    BallReal bridged;
    switch (f.tag()) {
        case FunctionId::Tag::fTMM:
            // fTMM = (1/(1-alpha) - T2(alpha)) / 2
            bridged = (BallReal::exact(1 / (1 - a)) - eval(FunctionId::T(2), p, prec_bits + 2)) *
                      Rational(1, 2);
            break;
        case FunctionId::Tag::fRPF: {
            // fRPF = G(2,2)(alpha) / alpha
            unsigned long extra =
                2 + mpz_sizeinbase(a.get_den_mpz_t(), 2) - mpz_sizeinbase(a.get_num_mpz_t(), 2) + 1;
            bridged = eval(FunctionId::G(2, 2), p, prec_bits + extra) * (1 / a);
            break;
        }
        case FunctionId::Tag::fC:
            bridged = eval(FunctionId::U(3), p, prec_bits);
            break;
        case FunctionId::Tag::Fcoons:
            // Fcoons = 2*alpha/(1-alpha) - G(2,0)(alpha)
            bridged = -eval(FunctionId::G(2, 0), p, prec_bits + 1) +
                      BallReal::exact(2 * a / (1 - a));
            break;
        case FunctionId::Tag::Gcoons:
            bridged = eval(FunctionId::G(2, 0), p, prec_bits);
            break;
        default:
            break;
    }
    return {direct, bridged};
}

}  // namespace mahler
