#include "mahler/relations.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mahler/lll.hpp"

namespace mahler {

ValueSpec ValueSpec::constant(std::string label, Rational value) {
    return ValueSpec{std::move(label),
                     [v = std::move(value)](unsigned long) { return BallReal::exact(v); }};
}

std::vector<std::vector<int>> monomial_exponents(std::size_t k, int D,
                                                 bool include_constant,
                                                 std::size_t max_monomials) {
    if (D < 1) throw std::invalid_argument("degree bound must be >= 1");
    if (k == 0) throw std::invalid_argument("no values given");
    std::vector<std::vector<int>> out;
    std::vector<int> current(k, 0);
    // Within a grade, recurse with the leading variable highest first.
    auto emit = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == k) {
            current[pos] = remaining;
            if (out.size() >= max_monomials)
                throw std::invalid_argument("monomial basis exceeds configured maximum");
            out.push_back(current);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    for (int grade = include_constant ? 0 : 1; grade <= D; ++grade)
        emit(emit, 0, grade);
    return out;
}

std::vector<BallReal> monomial_vector(const std::vector<BallReal>& values, int D,
                                      bool include_constant,
                                      std::size_t max_monomials) {
    auto exps = monomial_exponents(values.size(), D, include_constant, max_monomials);
    std::vector<BallReal> out;
    out.reserve(exps.size());
    for (const auto& e : exps) {
        BallReal m = BallReal::exact(Rational(1));
        for (std::size_t i = 0; i < values.size(); ++i)
            if (e[i] > 0) m = m * values[i].pow(static_cast<unsigned long>(e[i]));
        out.push_back(m);
    }
    return out;
}

namespace {

Integer norm2(const std::vector<Integer>& a, std::size_t upto) {
    Integer s(0);
    for (std::size_t i = 0; i < upto; ++i) s += a[i] * a[i];
    return s;
}

void normalize_sign(std::vector<Integer>& a) {
    for (const auto& x : a) {
        if (x > 0) return;
        if (x < 0) {
            for (auto& y : a) y = -y;
            return;
        }
    }
}

}  // namespace

std::optional<std::vector<Integer>> find_integer_relation(
    const std::vector<BallReal>& reals, const Integer& height,
    unsigned long prec_bits) {
    const std::size_t n = reals.size();
    if (n == 0) throw std::invalid_argument("empty value list");
    if (height < 1) throw std::invalid_argument("height bound must be >= 1");
    unsigned long floor_bits =
        16 * n + 2 * mpz_sizeinbase(height.get_mpz_t(), 2);
    if (prec_bits < floor_bits)
        throw std::invalid_argument("precision " + std::to_string(prec_bits) +
                                    " below floor " + std::to_string(floor_bits) +
                                    " for this query");
    const Rational rad_limit = pow2(-static_cast<long>(prec_bits));
    for (const auto& b : reals)
        if (b.rad() > rad_limit)
            throw std::invalid_argument("input radius exceeds 2^-prec");

    const Rational eps = pow2(-static_cast<long>(prec_bits / 2));

    auto residual = [&](const std::vector<Integer>& a) {
        BallReal s;
        for (std::size_t i = 0; i < n; ++i) s = s + reals[i] * Rational(a[i]);
        return s;
    };

    if (n == 1) {
        std::vector<Integer> a{Integer(1)};
        if (residual(a).abs_upper() < eps) return a;
        return std::nullopt;
    }

    // Staged reduction of the relation lattice [I | round(2^p * x)]: each
    // stage re-reduces at doubled column scale, warm-started by the
    // accumulated unimodular transform, so per-stage entries stay small.
    std::vector<std::vector<Integer>> U(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) U[i][i] = 1;

    std::vector<unsigned long> stages;
    for (unsigned long p = std::min<unsigned long>(prec_bits, 256);; p *= 2) {
        if (p >= prec_bits) {
            stages.push_back(prec_bits);
            break;
        }
        stages.push_back(p);
    }

    for (unsigned long p : stages) {
        Rational scale = pow2(static_cast<long>(p));
        std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n + 1));
        for (std::size_t i = 0; i < n; ++i) {
            Rational y(0);
            for (std::size_t j = 0; j < n; ++j)
                if (U[i][j] != 0) y += Rational(U[i][j]) * reals[j].mid();
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = U[i][j];
            rows[i][n] = round_to_integer(y * scale);
        }
        lll_reduce(rows);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) U[i][j] = rows[i][j];
    }

    std::optional<std::vector<Integer>> best;
    Integer best_norm(0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<Integer>& a = U[i];
        bool nonzero = false, small = true;
        for (const auto& x : a) {
            if (x != 0) nonzero = true;
            if (x > height || -x > height) small = false;
        }
        if (!nonzero || !small) continue;
        if (residual(a).abs_upper() >= eps) continue;
        Integer nrm = norm2(a, n);
        if (!best || nrm < best_norm) {
            best = a;
            best_norm = nrm;
        }
    }
    if (best) normalize_sign(*best);
    return best;
}

bool verify_relation(const std::vector<Integer>& candidate,
                     const std::vector<std::vector<int>>& exponents,
                     const std::vector<ValueSpec>& values, unsigned long prec_bits) {
    bool nonzero = false;
    for (const auto& x : candidate)
        if (x != 0) nonzero = true;
    if (!nonzero) throw std::invalid_argument("candidate relation is zero");
    if (candidate.size() != exponents.size())
        throw std::invalid_argument("candidate length does not match basis");
    const unsigned long check_bits = 2 * prec_bits;
    std::vector<BallReal> balls;
    balls.reserve(values.size());
    for (const auto& v : values) balls.push_back(v.eval_at(check_bits));
    BallReal dotsum;
    std::size_t idx = 0;
    for (const auto& e : exponents) {
        BallReal m = BallReal::exact(Rational(1));
        for (std::size_t i = 0; i < balls.size(); ++i)
            if (e[i] > 0) m = m * balls[i].pow(static_cast<unsigned long>(e[i]));
        dotsum = dotsum + m * Rational(candidate[idx++]);
    }
    return dotsum.contains_zero();
}

RelationReport search_algebraic_relation(const RelationQuery& q) {
    if (q.values.empty()) throw std::invalid_argument("query has no values");
    if (q.degree < 1) throw std::invalid_argument("degree bound must be >= 1");

    RelationReport report;
    report.degree = q.degree;
    report.height = q.height;
    report.prec_bits = q.prec_bits;
    report.monomials =
        monomial_exponents(q.values.size(), q.degree, q.include_constant, q.max_monomials);

    // Monomials amplify input radii (d/dx of x^e), so evaluate the values
    // with enough slack that every monomial still meets the 2^-prec floor.
    std::vector<BallReal> monomials;
    const Rational rad_limit = pow2(-static_cast<long>(q.prec_bits));
    for (unsigned long slack = 32;; slack *= 2) {
        if (slack > 16384) throw std::logic_error("monomial radii do not converge");
        std::vector<BallReal> balls;
        balls.reserve(q.values.size());
        for (const auto& v : q.values) {
            BallReal b = v.eval_at(q.prec_bits + slack);
            // Keep lattice construction cheap after exact accumulation.
            if (bit_size(b.mid()) > 4 * q.prec_bits) b = b.compressed(2 * q.prec_bits);
            balls.push_back(b);
        }
        monomials = monomial_vector(balls, q.degree, q.include_constant, q.max_monomials);
        bool ok = true;
        for (auto& m : monomials) {
            if (bit_size(m.mid()) > 4 * q.prec_bits) m = m.compressed(q.prec_bits + slack / 2);
            if (m.rad() > rad_limit) ok = false;
        }
        if (ok) break;
    }

    auto hit = find_integer_relation(monomials, q.height, q.prec_bits);
    if (hit && verify_relation(*hit, report.monomials, q.values, q.prec_bits)) {
        report.outcome = RelationReport::Outcome::Found;
        report.relation = *hit;
        report.verified = true;
    } else {
        report.outcome = RelationReport::Outcome::NoneUpToBounds;
        report.verified = false;
    }
    return report;
}

std::string RelationReport::to_json() const {
    std::ostringstream os;
    os << "{\"outcome\": \""
       << (outcome == Outcome::Found ? "found" : "none_up_to_bounds") << "\", ";
    os << "\"relation\": ";
    if (relation) {
        os << "[";
        for (std::size_t i = 0; i < relation->size(); ++i) {
            if (i) os << ", ";
            os << (*relation)[i].get_str();
        }
        os << "]";
    } else {
        os << "null";
    }
    os << ", \"monomials\": [";
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        if (i) os << ", ";
        os << "[";
        for (std::size_t j = 0; j < monomials[i].size(); ++j) {
            if (j) os << ", ";
            os << monomials[i][j];
        }
        os << "]";
    }
    os << "], \"bounds\": {\"degree\": " << degree << ", \"height\": "
       << height.get_str() << ", \"prec\": " << prec_bits << "}, \"verified\": "
       << (verified ? "true" : "false") << "}";
    return os.str();
}

}  // namespace mahler
