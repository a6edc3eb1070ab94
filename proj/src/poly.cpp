#include "bcp/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace bcp {

namespace {
const mpz_class kZero = 0;

// Dense rational polynomial used internally for division and remainders.
using QPoly = std::vector<mpq_class>;

QPoly to_q(const IntPoly& p) {
    QPoly q(p.coeffs().size());
    for (size_t i = 0; i < q.size(); ++i) q[i] = p.coeff(static_cast<int>(i));
    return q;
}

void q_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// p mod d over Q, d != 0.
QPoly q_rem(QPoly p, const QPoly& d) {
    q_trim(p);
    while (p.size() >= d.size()) {
        mpq_class factor = p.back() / d.back();
        size_t shift = p.size() - d.size();
        for (size_t i = 0; i < d.size(); ++i) p[shift + i] -= factor * d[i];
        q_trim(p);
        if (p.empty()) break;
    }
    return p;
}

// Scale by the unique positive rational making the coefficients integer and
// coprime; signs are preserved.
IntPoly q_to_primitive_int(const QPoly& p) {
    mpz_class den_lcm = 1;
    for (const auto& c : p) {
        mpz_class d = c.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<mpz_class> ints(p.size());
    mpz_class content = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        mpq_class scaled = p[i] * den_lcm;
        ints[i] = scaled.get_num();  // denominator is 1 after scaling
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (content > 1)
        for (auto& c : ints) c /= content;
    return IntPoly(std::move(ints));
}

}  // namespace

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

double rational_to_double(const mpq_class& q) { return q.get_d(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long c : coeffs) c_.emplace_back(c);
    canonicalize();
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { canonicalize(); }

IntPoly IntPoly::constant(const mpz_class& c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(c);
    return p;
}

IntPoly IntPoly::x_power(int k) {
    IntPoly p;
    p.c_.assign(k + 1, 0);
    p.c_[k] = 1;
    return p;
}

void IntPoly::canonicalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> out(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> out(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> out(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> out = c_;
    for (auto& c : out) c = -c;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::times_x_power(int k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : IntPoly();
    std::vector<mpz_class> out(c_.size() + k, 0);
    for (size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::plus_constant(const mpz_class& c) const { return *this + constant(c); }

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(out));
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + mpq_class(c_[i]);
    return acc;
}

double IntPoly::eval_double(double x) const {
    double acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
    return acc;
}

int IntPoly::sign_at(const mpq_class& x) const {
    if (is_zero()) return 0;
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();  // > 0, canonical
    // sum c_i * num^i * den^(deg - i), evaluated Horner style in num with a
    // running power of den; the total sign matches sgn(p(x)).
    mpz_class acc = 0;
    mpz_class den_pow = 1;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * num + c_[i] * den_pow;
        if (i > 0) den_pow *= den;
    }
    return sgn(acc);
}

std::optional<IntPoly> IntPoly::divided_by(const IntPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    QPoly rem = to_q(*this);
    const QPoly d = to_q(divisor);
    QPoly quot(rem.size() >= d.size() ? rem.size() - d.size() + 1 : 0, mpq_class(0));
    q_trim(rem);
    while (rem.size() >= d.size()) {
        mpq_class factor = rem.back() / d.back();
        size_t shift = rem.size() - d.size();
        quot[shift] = factor;
        for (size_t i = 0; i < d.size(); ++i) rem[shift + i] -= factor * d[i];
        q_trim(rem);
    }
    if (!rem.empty()) return std::nullopt;
    std::vector<mpz_class> out(quot.size());
    for (size_t i = 0; i < quot.size(); ++i) {
        if (quot[i].get_den() != 1) return std::nullopt;
        out[i] = quot[i].get_num();
    }
    return IntPoly(std::move(out));
}

int IntPoly::root_multiplicity(const mpq_class& root) const {
    if (is_zero()) return 0;
    std::vector<mpz_class> factor_coeffs(2);
    factor_coeffs[0] = -root.get_num();
    factor_coeffs[1] = root.get_den();
    const IntPoly factor(std::move(factor_coeffs));
    int mult = 0;
    IntPoly cur = *this;
    while (true) {
        auto next = cur.divided_by(factor);
        if (!next) break;
        cur = *next;
        ++mult;
    }
    return mult;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpz_class a = c_[i];
        if (first) {
            if (a < 0) out << "-", a = -a;
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

nlohmann::ordered_json IntPoly::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : c_) arr.push_back(c.get_str());
    return arr;
}

mpz_class poly_content(const IntPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly poly_primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    mpz_class c = poly_content(p);
    std::vector<mpz_class> out = p.coeffs();
    if (c > 1)
        for (auto& x : out) x /= c;
    return IntPoly(std::move(out));
}

IntPoly poly_gcd(const IntPoly& p, const IntPoly& q) {
    QPoly a = to_q(poly_primitive_part(p));
    QPoly b = to_q(poly_primitive_part(q));
    q_trim(a);
    q_trim(b);
    while (!b.empty()) {
        QPoly r = q_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    IntPoly g = q_to_primitive_int(a);
    if (!g.is_zero() && g.coeff(g.degree()) < 0) g = -g;
    return g;
}

}  // namespace bcp
