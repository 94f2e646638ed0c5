#include "genus/ktheory.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>
#include <utility>

namespace genus {

namespace mp = boost::multiprecision;

TruncatedSeries::TruncatedSeries(std::size_t order, std::optional<Int> modulus)
    : coeffs_(order, Int(0)), modulus_(std::move(modulus)) {
    if (order == 0) throw DomainError("TruncatedSeries: order must be positive");
    if (modulus_ && *modulus_ <= 0) {
        throw DomainError("TruncatedSeries: modulus must be positive");
    }
}

TruncatedSeries TruncatedSeries::constant(const Int& c, std::size_t order,
                                          std::optional<Int> modulus) {
    TruncatedSeries s(order, std::move(modulus));
    s.set_coeff(0, c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Int& c, std::size_t degree, std::size_t order,
                                          std::optional<Int> modulus) {
    TruncatedSeries s(order, std::move(modulus));
    if (degree < order) s.set_coeff(degree, c);
    return s;
}

const Int& TruncatedSeries::coeff(std::size_t j) const {
    static const Int zero(0);
    return j < coeffs_.size() ? coeffs_[j] : zero;
}

void TruncatedSeries::set_coeff(std::size_t j, const Int& c) {
    if (j >= coeffs_.size()) return; // discarded term
    coeffs_[j] = c;
    if (modulus_) {
        coeffs_[j] %= *modulus_;
        if (coeffs_[j] < 0) coeffs_[j] += *modulus_;
    }
}

bool TruncatedSeries::is_zero() const {
    for (const Int& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

void TruncatedSeries::reduce() {
    if (!modulus_) return;
    for (Int& c : coeffs_) {
        c %= *modulus_;
        if (c < 0) c += *modulus_;
    }
}

void TruncatedSeries::check_compatible(const TruncatedSeries& other, const char* op) const {
    if (coeffs_.size() != other.coeffs_.size()) {
        throw MismatchError(std::string(op) + ": truncation orders differ (" +
                            std::to_string(coeffs_.size()) + " vs " +
                            std::to_string(other.coeffs_.size()) + ")");
    }
    if (modulus_ != other.modulus_) {
        throw MismatchError(std::string(op) + ": moduli differ");
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    check_compatible(rhs, "series add");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
    reduce();
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    check_compatible(rhs, "series subtract");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
    reduce();
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b, "series multiply");
    const std::size_t n = a.coeffs_.size();
    TruncatedSeries out(n, a.modulus_);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b.coeffs_[j] == 0) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    out.reduce();
    return out;
}

TruncatedSeries TruncatedSeries::pow(const Int& e) const {
    if (e < 0) throw DomainError("series pow: exponent must be nonnegative");
    TruncatedSeries result = constant(1, order(), modulus_);
    TruncatedSeries square = *this;
    Int k = e;
    while (k > 0) {
        if (k % 2 == 1) result = result * square;
        k >>= 1;
        if (k > 0) square = square * square;
    }
    return result;
}

TruncatedSeries TruncatedSeries::substitute(const TruncatedSeries& u) const {
    check_compatible(u, "series substitute");
    if (u.coeff(0) != 0) {
        throw ConstantTermError("series substitute: substituted series has a constant term");
    }
    // Horner from the top coefficient down.
    TruncatedSeries result = constant(coeffs_.back(), order(), modulus_);
    for (std::size_t j = coeffs_.size() - 1; j-- > 0;) {
        result = result * u;
        result.coeffs_[0] += coeffs_[j];
        result.reduce();
    }
    return result;
}

std::string TruncatedSeries::str(const std::string& var) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (j == 0) {
            out << coeffs_[j];
        } else {
            if (coeffs_[j] != 1) out << coeffs_[j] << "*";
            out << var;
            if (j > 1) out << "^" << j;
        }
    }
    if (first) out << "0";
    return out.str();
}

TruncatedSeries adams_on_cp(const Int& r, const TruncatedSeries& s) {
    if (r <= 0) throw DomainError("adams_on_cp: r must be positive");
    if (s.coeff(0) != 0) {
        throw ConstantTermError("adams_on_cp: series must have zero constant term");
    }
    TruncatedSeries one_plus_x = TruncatedSeries::constant(1, s.order(), s.modulus());
    one_plus_x.set_coeff(1, 1);
    TruncatedSeries image = one_plus_x.pow(r);
    image -= TruncatedSeries::constant(1, s.order(), s.modulus());
    return s.substitute(image);
}

TruncatedSeries pullback(const Int& k, const std::map<std::size_t, Int>& higher,
                         std::size_t order, std::optional<Int> modulus) {
    if (order < 3) throw DomainError("pullback: truncation order must be at least 3");
    TruncatedSeries s(order, std::move(modulus));
    s.set_coeff(2, k);
    for (const auto& [j, c] : higher) {
        if (j < 3) {
            throw DomainError("pullback: higher coefficients start at degree 3, got " +
                              std::to_string(j));
        }
        s.set_coeff(j, c);
    }
    return s;
}

namespace {

std::size_t series_order_for(const Prime& p) {
    return static_cast<std::size_t>(p.value()) + 2;
}

} // namespace

AdamsImageX adams_on_x(const Prime& p, Sign sign) {
    if (!p.is_odd()) {
        throw EvenPrimeError("adams_on_x: no formula at p = 2");
    }
    const Int p2 = p.value() * p.value();
    const std::size_t half = static_cast<std::size_t>((p.value() + 1) / 2);
    TruncatedSeries value =
        TruncatedSeries::monomial(sign * Int(2 * p.value()), half, series_order_for(p), p2);
    return AdamsImageX{p, sign, std::move(value)};
}

bool check_naturality(const Prime& p, const Int& k, Sign sign,
                      const std::map<std::size_t, Int>& higher) {
    if (!p.is_odd()) throw EvenPrimeError("check_naturality: p must be odd");
    if (k == 0) throw ZeroError("check_naturality: k is zero");
    if (k % p.value() == 0) {
        throw DivisibilityError("check_naturality: " + p.value().str() + " divides " + k.str());
    }
    const Int p2 = p.value() * p.value();
    const std::size_t order = series_order_for(p);
    const TruncatedSeries f = pullback(k, higher, order, p2);
    const TruncatedSeries lhs = adams_on_x(p, sign).value.substitute(f);
    const TruncatedSeries rhs = adams_on_cp(p.value(), f);
    const std::size_t cmp = static_cast<std::size_t>(p.value()) + 1;
    return lhs.coeff(cmp) == rhs.coeff(cmp);
}

Sign rector_congruence_sign(const Prime& p, const Int& k) {
    if (!p.is_odd()) throw EvenPrimeError("rector_congruence_sign: p must be odd");
    if (k == 0) throw ZeroError("rector_congruence_sign: k is zero");
    if (k % p.value() == 0) {
        throw DivisibilityError("rector_congruence_sign: " + p.value().str() + " divides " +
                                k.str());
    }
    const Int p2 = p.value() * p.value();
    Int kp = k % p2;
    if (kp < 0) kp += p2;
    const Int power = mp::powm(kp, (p.value() + 1) / 2, p2);
    Int rhs = (2 * p.value() * k) % p2;
    if (rhs < 0) rhs += p2;
    for (Sign s : {Sign::plus(), Sign::minus()}) {
        Int lhs = (s * Int(2 * p.value() * power)) % p2;
        if (lhs < 0) lhs += p2;
        if (lhs == rhs) return s;
    }
    throw NoSolutionError("rector_congruence_sign: no sign satisfies the congruence at p = " +
                          p.value().str() + ", k = " + k.str());
}

} // namespace genus
