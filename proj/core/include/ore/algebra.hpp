#ifndef ORE_ALGEBRA_HPP
#define ORE_ALGEBRA_HPP

#include <optional>
#include <string>

#include "ore/scalar.hpp"

namespace ore {

/// Generator kinds.  Each built-in kind fixes the pair (sigma(x), delta(x))
/// governing the commutation rule X*a = sigma(a)*X + delta(a):
///   D -> (x, 1)      standard derivation d/dx
///   S -> (x+1, 0)    shift x -> x+1
///   T -> (x, x)      Euler derivation x*d/dx
///   F -> (x+1, 1)    forward difference
///   Q -> (q*x, 0)    q-shift
///   J -> (q*x, 1)    q-derivation
enum class AlgKind { D, S, T, F, Q, J, Custom };

enum class CoeffDomain { Poly, RatFun };

/// Descriptor of a univariate Ore algebra.  sigma extends to the base ring
/// as the substitution x -> sigma_image fixing constants; delta extends by
/// the skew Leibniz rule delta(ab) = delta(a) b + sigma(a) delta(b) with
/// constants mapped to zero.
class OreAlgebra {
public:
    static OreAlgebra make(std::string base_var, std::string gen_name, AlgKind kind,
                           CoeffDomain domain = CoeffDomain::Poly,
                           std::optional<Scalar> q = std::nullopt,
                           std::optional<BFrac> custom_sigma = std::nullopt,
                           std::optional<BFrac> custom_delta = std::nullopt);

    /// Paper-style shorthand: the prefix letter of the generator name picks
    /// the kind and the rest names the base variable ("Sn" -> shift in n).
    static OreAlgebra from_generator_name(const std::string& gen_name,
                                          CoeffDomain domain = CoeffDomain::Poly,
                                          std::optional<Scalar> q = std::nullopt);

    const std::string& base_var() const { return base_var_; }
    const std::string& gen_name() const { return gen_name_; }
    AlgKind kind() const { return kind_; }
    CoeffDomain coeff_domain() const { return domain_; }
    ConstKind const_kind() const { return const_kind_; }
    bool has_q() const { return q_.has_value(); }
    const Scalar& q() const;
    const BFrac& sigma_image() const { return sigma_; }
    const BFrac& delta_image() const { return delta_; }

    /// Same commutation structure; only the coefficient domain may differ.
    bool same_structure(const OreAlgebra& o) const;
    OreAlgebra with_domain(CoeffDomain d) const;

    friend bool operator==(const OreAlgebra& a, const OreAlgebra& b) {
        return a.same_structure(b) && a.domain_ == b.domain_;
    }
    friend bool operator!=(const OreAlgebra& a, const OreAlgebra& b) { return !(a == b); }

    BFrac sigma(const BFrac& f) const { return sigma_pow(f, 1); }
    BFrac delta(const BFrac& f) const;
    BPoly sigma(const BPoly& p) const;

    /// sigma^k; negative k supported for the built-in kinds (all of which
    /// have invertible sigma).
    BFrac sigma_pow(const BFrac& f, long k) const;
    BPoly sigma_pow(const BPoly& p, long k) const;

    /// The image of the base variable under sigma^k.
    BFrac sigma_var(long k) const;

private:
    OreAlgebra() = default;

    std::string base_var_, gen_name_;
    AlgKind kind_ = AlgKind::Custom;
    CoeffDomain domain_ = CoeffDomain::Poly;
    ConstKind const_kind_ = ConstKind::Rationals;
    std::optional<Scalar> q_;
    BFrac sigma_, delta_;
};

std::string to_string(AlgKind k);

} // namespace ore

#endif
