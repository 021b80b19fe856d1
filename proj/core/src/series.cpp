#include "ore/series.hpp"

#include <algorithm>
#include <sstream>

#include "ore/errors.hpp"

namespace ore {

TruncSeries::TruncSeries(std::vector<Scalar> coeffs, int prec) : c_(std::move(coeffs)), prec_(prec) {
    if (prec_ < 0) throw domain_error("negative series precision");
    if (static_cast<int>(c_.size()) > prec_) c_.resize(static_cast<std::size_t>(prec_));
    trim_();
}

TruncSeries TruncSeries::from_poly(const BPoly& p, int prec) {
    return TruncSeries(p.coeffs(), prec);
}

void TruncSeries::trim_() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Scalar& TruncSeries::coeff(int m) const {
    static const Scalar zero{};
    if (m < 0 || m >= prec_) throw domain_error("series coefficient beyond precision");
    if (m >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(m)];
}

int TruncSeries::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return kNegInfDeg;
}

TruncSeries TruncSeries::truncated(int prec) const {
    std::vector<Scalar> cs = c_;
    return TruncSeries(std::move(cs), std::min(prec, prec_));
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    int prec = std::min(a.prec_, b.prec_);
    std::vector<Scalar> cs(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i < a.c_.size()) cs[i] += a.c_[i];
        if (i < b.c_.size()) cs[i] += b.c_[i];
    }
    return TruncSeries(std::move(cs), prec);
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

TruncSeries TruncSeries::scaled(const Scalar& s) const {
    std::vector<Scalar> cs = c_;
    for (auto& c : cs) c *= s;
    return TruncSeries(std::move(cs), prec_);
}

TruncSeries TruncSeries::mul_poly(const BPoly& p) const {
    if (p.is_zero() || c_.empty()) return TruncSeries({}, prec_);
    std::vector<Scalar> cs(std::min<std::size_t>(
                               c_.size() + static_cast<std::size_t>(p.degree()),
                               static_cast<std::size_t>(prec_)),
                           Scalar(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; j <= p.degree(); ++j) {
            std::size_t k = i + static_cast<std::size_t>(j);
            if (k >= cs.size()) break;
            cs[k] += c_[i] * p.coeff(j);
        }
    }
    return TruncSeries(std::move(cs), prec_);
}

TruncSeries TruncSeries::div_poly(const BPoly& p) const {
    if (p.is_zero() || p.coeff(0).is_zero())
        throw domain_error("series division requires a unit constant term");
    std::vector<Scalar> out(static_cast<std::size_t>(prec_), Scalar(0));
    Scalar inv = Scalar(1) / p.coeff(0);
    for (int m = 0; m < prec_; ++m) {
        Scalar acc = (m < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(m)] : Scalar(0);
        for (int j = 1; j <= std::min(m, p.degree()); ++j)
            acc -= p.coeff(j) * out[static_cast<std::size_t>(m - j)];
        out[static_cast<std::size_t>(m)] = acc * inv;
    }
    return TruncSeries(std::move(out), prec_);
}

TruncSeries TruncSeries::derivative() const {
    if (prec_ == 0) throw domain_error("series precision exhausted by derivative");
    std::vector<Scalar> cs;
    if (c_.size() > 1) {
        cs.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            cs[i - 1] = Scalar(static_cast<long>(i)) * c_[i];
    }
    return TruncSeries(std::move(cs), prec_ - 1);
}

TruncSeries TruncSeries::euler() const {
    std::vector<Scalar> cs = c_;
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] *= Scalar(static_cast<long>(i));
    return TruncSeries(std::move(cs), prec_);
}

TruncSeries TruncSeries::scale_var(const Scalar& q) const {
    std::vector<Scalar> cs = c_;
    Scalar f(1);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        cs[i] *= f;
        f *= q;
    }
    return TruncSeries(std::move(cs), prec_);
}

TruncSeries TruncSeries::jackson(const Scalar& q) const {
    if ((q - Scalar(1)).is_zero())
        throw unsupported_error("Jackson derivative undefined at q = 1");
    if (prec_ == 0) throw domain_error("series precision exhausted by q-derivative");
    // coefficient n of the result is [n+1]_q * c_{n+1}
    std::vector<Scalar> cs;
    if (c_.size() > 1) {
        cs.resize(c_.size() - 1);
        Scalar bracket(1); // [1]_q
        Scalar qpow = q;
        for (std::size_t i = 1; i < c_.size(); ++i) {
            cs[i - 1] = bracket * c_[i];
            bracket += qpow;
            qpow *= q;
        }
    }
    return TruncSeries(std::move(cs), prec_ - 1);
}

std::string TruncSeries::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string cstr = c_[i].to_string();
        bool neg = !cstr.empty() && cstr[0] == '-';
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) cstr = cstr.substr(1);
        bool needs_parens = cstr.find_first_of("+- ") != std::string::npos;
        bool unit = (cstr == "1");
        if (i == 0) {
            os << (needs_parens ? "(" + cstr + ")" : cstr);
        } else {
            if (!unit) os << (needs_parens ? "(" + cstr + ")" : cstr) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    if (!first) os << " + ";
    os << "O(" << var << "^" << prec_ << ")";
    return os.str();
}

} // namespace ore
