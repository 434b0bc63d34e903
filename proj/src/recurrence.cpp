#include "solzeta/recurrence.hpp"

#include <algorithm>

namespace solzeta {

std::string poly_to_string(const IntPoly& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += p[i].get_str();
    }
    return s + "]";
}

std::vector<BigRat> expand_ratfunc(const IntPoly& num, const IntPoly& den, long N) {
    if (den.empty() || den[0] == 0)
        throw std::domain_error("expand_ratfunc: denominator must have nonzero constant term");
    std::vector<BigRat> c(static_cast<std::size_t>(N) + 1);
    BigRat d0(den[0]);
    for (long n = 0; n <= N; ++n) {
        BigRat acc = n < static_cast<long>(num.size()) ? BigRat(num[static_cast<std::size_t>(n)])
                                                       : BigRat(0);
        for (long i = 1; i < static_cast<long>(den.size()) && i <= n; ++i)
            acc -= BigRat(den[static_cast<std::size_t>(i)]) * c[static_cast<std::size_t>(n - i)];
        c[static_cast<std::size_t>(n)] = acc / d0;
    }
    return c;
}

Classification classify(const SolenoidSpec& spec) {
    Classification out;
    const PrimeSet& sp = spec.s_prime();
    if (!sp.empty()) {
        out.rational = false;
        out.irrationality_witnesses.assign(sp.begin(), sp.end());
        return out;
    }
    out.rational = true;
    RationalWitness w;
    if (spec.mode() == SolenoidSpec::Mode::cofinite) {
        // T empty: the trivial sequence f = 1, F = z/(1-z), zeta = 1/(1-z)
        w.zeta_num = {1};
        w.zeta_den = {1, -1};
        w.f_num = {0, 1};
        w.f_den = {1, -1};
    } else {
        const BigInt &a = spec.a(), &b = spec.b();
        w.zeta_num = {1, -b};
        w.zeta_den = {1, -a};
        w.f_num = {0, a - b};
        w.f_den = {1, -(a + b), a * b};
    }
    out.witness = std::move(w);
    return out;
}

namespace {

// Gaussian elimination over Q on an augmented system; returns a solution
// with free variables pinned to zero, or nullopt when inconsistent.
std::optional<std::vector<BigRat>> solve_exact(std::vector<std::vector<BigRat>> m, long cols) {
    long rows = static_cast<long>(m.size());
    std::vector<long> pivot_of_col(static_cast<std::size_t>(cols), -1);
    long row = 0;
    for (long col = 0; col < cols && row < rows; ++col) {
        long pr = -1;
        for (long i = row; i < rows; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[static_cast<std::size_t>(row)], m[static_cast<std::size_t>(pr)]);
        BigRat inv = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        for (long j = col; j <= cols; ++j)
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] /= inv;
        for (long i = 0; i < rows; ++i) {
            if (i == row) continue;
            BigRat f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (long j = col; j <= cols; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
        }
        pivot_of_col[static_cast<std::size_t>(col)] = row;
        ++row;
    }
    // inconsistency: a zero row with nonzero rhs
    for (long i = row; i < rows; ++i)
        if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)] != 0) return std::nullopt;
    std::vector<BigRat> sol(static_cast<std::size_t>(cols), BigRat(0));
    for (long col = 0; col < cols; ++col) {
        long pr = pivot_of_col[static_cast<std::size_t>(col)];
        if (pr >= 0) sol[static_cast<std::size_t>(col)] = m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(cols)];
    }
    return sol;
}

bool recurrence_holds(const SeriesPrefix& s, const std::vector<BigRat>& c, long from, long to) {
    long d = static_cast<long>(c.size());
    for (long n = from; n <= to; ++n) {
        BigRat acc(0);
        for (long i = 1; i <= d; ++i) acc += c[static_cast<std::size_t>(i - 1)] * s.at(n - i);
        if (acc != s.at(n)) return false;
    }
    return true;
}

}  // namespace

RecurrenceResult min_recurrence(const SeriesPrefix& prefix, long max_order) {
    if (max_order < 1) throw std::domain_error("min_recurrence: max_order must be >= 1");
    long L = prefix.length();
    if (L < 2 * max_order + 8)
        throw std::domain_error("min_recurrence: prefix too short (need >= 2*max_order + 8 terms)");
    long first = prefix.start;
    long last = prefix.last_index();
    // hold out the final 32 terms when the prefix can afford it
    long fit_last = (L - 32 >= 2 * max_order + 8) ? last - 32 : last;

    RecurrenceResult res;
    res.prefix_length = L;
    res.max_order_searched = max_order;
    res.fit_window = fit_last - first + 1;
    for (long d = 1; d <= max_order; ++d) {
        std::vector<std::vector<BigRat>> rows;
        for (long n = first + d; n <= fit_last; ++n) {
            std::vector<BigRat> row;
            row.reserve(static_cast<std::size_t>(d) + 1);
            for (long i = 1; i <= d; ++i) row.push_back(prefix.at(n - i));
            row.push_back(prefix.at(n));
            rows.push_back(std::move(row));
        }
        auto sol = solve_exact(std::move(rows), d);
        if (!sol) continue;
        if (!recurrence_holds(prefix, *sol, first + d, last)) continue;
        res.found = true;
        res.order = d;
        res.coefficients = std::move(*sol);
        return res;
    }
    return res;
}

RigidIndicesReport rigid_indices(const SolenoidSpec& spec, const BigInt& q, unsigned e_max,
                                 unsigned samples_per_index) {
    if (e_max < 1) throw std::domain_error("rigid_indices: e_max must be >= 1");
    if (!is_probable_prime(q)) throw std::domain_error("rigid_indices: q must be prime");
    const PrimeSet& sp = spec.s_prime();
    if (sp.empty())
        throw std::domain_error("rigid_indices: S' is empty, nothing rigid to exhibit");
    if (sp.contains(q)) throw std::domain_error("rigid_indices: q must lie outside S'");

    RigidIndicesReport rep;
    rep.q = q;
    rep.base = 1;
    for (const PlaceKernel& k : spec.kernels()) {
        if (k.m % q == 0)
            throw std::domain_error("rigid_indices: q divides m_p for p=" + k.p.get_str());
        rep.base *= k.m * int_pow(k.p, k.D);
    }

    rep.all_stable = true;
    std::vector<BigInt> f_values;
    for (unsigned e = 1; e <= e_max; ++e) {
        RigidIndexCheck chk;
        chk.n_e = rep.base * int_pow(q, e);
        chk.kernel_factor = local_factor(spec, chk.n_e);
        chk.factor_stable = true;
        BigInt k(2);
        while (chk.multipliers.size() < samples_per_index) {
            if (gcd(k, chk.n_e) == 1) {
                if (local_factor(spec, BigInt(k * chk.n_e)) != chk.kernel_factor)
                    chk.factor_stable = false;
                chk.multipliers.push_back(k);
            }
            ++k;
        }
        rep.all_stable = rep.all_stable && chk.factor_stable;
        f_values.push_back(f_value(spec, chk.n_e));
        rep.checks.push_back(std::move(chk));
    }
    std::vector<BigInt> sorted = f_values;
    std::sort(sorted.begin(), sorted.end());
    rep.f_values_distinct =
        std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    return rep;
}

}  // namespace solzeta
