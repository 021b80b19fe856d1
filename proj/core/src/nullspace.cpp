#include "ore/nullspace.hpp"

#include <algorithm>
#include <cstdint>

#include "ore/errors.hpp"

namespace ore {

namespace {

using Row = std::vector<Integer>;

// Clear denominators row by row; row scaling does not change the nullspace.
std::vector<Row> scale_rows_to_integers(const MatQ& m, std::size_t cols) {
    std::vector<Row> z;
    z.reserve(m.size());
    for (const auto& row : m) {
        Integer den = 1;
        for (std::size_t j = 0; j < cols; ++j) den = lcm(den, row[j].den());
        Row zr(cols);
        for (std::size_t j = 0; j < cols; ++j) zr[j] = row[j].num() * (den / row[j].den());
        z.push_back(std::move(zr));
    }
    return z;
}

// Primitive integer vector with first nonzero entry positive.
VecZ canonical_integer_vector(const std::vector<Rational>& v) {
    Integer den = 1;
    for (const auto& c : v) den = lcm(den, c.den());
    VecZ z(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        z[i] = v[i].num() * (den / v[i].den());
        g = gcd(g, z[i]);
    }
    if (g == 0) return z;
    for (auto& c : z)
        if (c != 0) {
            if (c < 0) g = -g;
            break;
        }
    for (auto& c : z) c /= g;
    return z;
}

bool is_exact_kernel_vector(const std::vector<Row>& z, const VecZ& v) {
    for (const auto& row : z) {
        Integer acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0 && row[j] != 0) acc += row[j] * v[j];
        if (acc != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------- Bareiss

struct Echelon {
    std::vector<Row> rows;       // echelon rows, one per pivot
    std::vector<std::size_t> pivcol;
};

// Fraction-free row echelon form.  Pivot rule: leftmost column, and within
// it the candidate of smallest bit size.
Echelon bareiss_echelon(std::vector<Row> a, std::size_t cols) {
    Echelon e;
    const std::size_t rows = a.size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t best = rows;
        std::size_t best_bits = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            std::size_t bits = mpz_sizeinbase(a[i][col].get_mpz_t(), 2);
            if (best == rows || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best == rows) continue;
        std::swap(a[r], a[best]);
        const Integer p = a[r][col];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Integer f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                Integer t = a[i][j] * p - f * a[r][j];
                a[i][j] = t / prev;
            }
        }
        e.rows.push_back(a[r]);
        e.pivcol.push_back(col);
        prev = p;
        ++r;
    }
    return e;
}

std::vector<VecZ> kernel_from_echelon(const Echelon& e, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivcol) is_pivot[c] = true;
    std::vector<VecZ> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = Rational(1);
        for (std::size_t ii = e.rows.size(); ii-- > 0;) {
            const Row& row = e.rows[ii];
            const std::size_t pc = e.pivcol[ii];
            Rational acc(0);
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (row[j] == 0 || v[j].is_zero()) continue;
                acc += Rational(row[j]) * v[j];
            }
            v[pc] = -acc / Rational(row[pc]);
        }
        basis.push_back(canonical_integer_vector(v));
    }
    return basis;
}

// ----------------------------------------------------------- modular path

constexpr std::size_t kDirectCols = 48;
constexpr std::size_t kDirectRows = 128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1;
    while (e) {
        if (e & 1) acc = mulmod(acc, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return acc;
}

// Deterministic sequence of 62-bit primes, grown on demand.
const std::vector<std::uint64_t>& prime_pool(std::size_t n) {
    static std::vector<std::uint64_t> pool;
    static Integer cursor = Integer(1) << 62;
    while (pool.size() < n) {
        Integer next;
        mpz_nextprime(next.get_mpz_t(), cursor.get_mpz_t());
        cursor = next;
        pool.push_back(static_cast<std::uint64_t>(mpz_get_ui(next.get_mpz_t())));
    }
    return pool;
}

struct ModRref {
    std::vector<std::size_t> pivcol;
    // For each pivot row, its entries at the free columns (RREF form).
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<std::size_t> freecol;
};

ModRref rref_mod(const std::vector<Row>& z, std::size_t cols, std::uint64_t p) {
    const std::size_t rows = z.size();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::uint64_t v = mpz_fdiv_ui(z[i][j].get_mpz_t(), p);
            a[i][j] = v;
        }
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(a[r], a[sel]);
        std::uint64_t inv = powmod(a[r][col], p - 2, p);
        for (std::size_t j = col; j < cols; ++j) a[r][j] = mulmod(a[r][j], inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][col] == 0) continue;
            std::uint64_t f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                std::uint64_t t = mulmod(f, a[r][j], p);
                a[i][j] = (a[i][j] >= t) ? a[i][j] - t : a[i][j] + p - t;
            }
        }
        pivcol.push_back(col);
        ++r;
    }
    ModRref out;
    out.pivcol = pivcol;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivcol) is_pivot[c] = true;
    for (std::size_t j = 0; j < cols; ++j)
        if (!is_pivot[j]) out.freecol.push_back(j);
    out.rows.resize(pivcol.size());
    for (std::size_t i = 0; i < pivcol.size(); ++i) {
        out.rows[i].resize(out.freecol.size());
        for (std::size_t k = 0; k < out.freecol.size(); ++k)
            out.rows[i][k] = a[i][out.freecol[k]];
    }
    return out;
}

bool rational_reconstruct(const Integer& r, const Integer& m, Rational& out) {
    Integer bound;
    mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
    Integer r0 = m, r1 = r, t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Integer t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return false;
    Integer ta = t1 < 0 ? Integer(-t1) : t1;
    if (ta > bound) return false;
    out = Rational(r1, t1);
    return true;
}

// Certified modular nullspace: returns true and fills `basis` only when the
// exact verification succeeded, which makes the result unconditional.
bool nullspace_modular(const std::vector<Row>& z, std::size_t cols,
                       std::vector<VecZ>& basis) {
    constexpr std::size_t kAttempts = 3;
    constexpr std::size_t kMaxPrimes = 512;
    for (std::size_t attempt = 0; attempt < kAttempts; ++attempt) {
        const auto& primes = prime_pool(attempt + 1);
        ModRref base = rref_mod(z, cols, primes[attempt]);
        if (base.freecol.empty()) {
            // rank mod p is a lower bound for the exact rank, so full modular
            // column rank certifies an empty nullspace.
            basis.clear();
            return true;
        }
        const std::size_t nr = base.rows.size(), nf = base.freecol.size();

        std::vector<std::vector<Integer>> crt(nr, std::vector<Integer>(nf));
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t k = 0; k < nf; ++k) crt[i][k] = Integer(base.rows[i][k]);
        Integer modulus = Integer(primes[attempt]);

        for (std::size_t np = 1; np <= kMaxPrimes; ++np) {
            // Try to reconstruct with the current modulus.
            std::vector<std::vector<Rational>> rr(nr, std::vector<Rational>(nf));
            bool ok = true;
            for (std::size_t i = 0; i < nr && ok; ++i)
                for (std::size_t k = 0; k < nf && ok; ++k)
                    ok = rational_reconstruct(crt[i][k], modulus, rr[i][k]);
            if (ok) {
                std::vector<VecZ> cand;
                bool verified = true;
                for (std::size_t k = 0; k < nf && verified; ++k) {
                    std::vector<Rational> v(cols, Rational(0));
                    v[base.freecol[k]] = Rational(1);
                    for (std::size_t i = 0; i < nr; ++i) v[base.pivcol[i]] = -rr[i][k];
                    VecZ zv = canonical_integer_vector(v);
                    verified = is_exact_kernel_vector(z, zv);
                    if (verified) cand.push_back(std::move(zv));
                }
                if (verified) {
                    basis = std::move(cand);
                    return true;
                }
                // A candidate failed: either too few primes (spurious
                // reconstruction) or an unlucky structure prime.  More primes
                // settle the former; the attempt loop settles the latter.
            }
            if (np == kMaxPrimes) break;
            const auto& pool = prime_pool(attempt + 1 + np);
            std::uint64_t p = pool[attempt + np];
            ModRref step = rref_mod(z, cols, p);
            if (step.pivcol != base.pivcol) continue; // skip inconsistent prime
            Integer pz(p);
            Integer newmod = modulus * pz;
            for (std::size_t i = 0; i < nr; ++i)
                for (std::size_t k = 0; k < nf; ++k) {
                    // CRT lift of crt[i][k] (mod modulus) and step entry (mod p).
                    Integer cur = crt[i][k];
                    Integer rp(step.rows[i][k]);
                    Integer diff = rp - cur;
                    Integer minv;
                    Integer mm = modulus % pz;
                    mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), pz.get_mpz_t());
                    Integer t = (diff * minv) % pz;
                    if (t < 0) t += pz;
                    crt[i][k] = cur + modulus * t;
                }
            modulus = newmod;
        }
    }
    return false;
}

} // namespace

std::vector<VecZ> nullspace(const MatQ& m, std::size_t cols) {
    for (const auto& row : m)
        if (row.size() != cols) throw domain_error("ragged matrix");
    if (cols == 0) return {};
    std::vector<Row> z = scale_rows_to_integers(m, cols);
    if (cols > kDirectCols || z.size() > kDirectRows) {
        std::vector<VecZ> basis;
        if (nullspace_modular(z, cols, basis)) return basis;
    }
    Echelon e = bareiss_echelon(z, cols);
    return kernel_from_echelon(e, cols);
}

} // namespace ore
