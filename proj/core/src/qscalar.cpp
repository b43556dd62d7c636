#include "heckelab/qscalar.hpp"

#include <cctype>
#include <sstream>

namespace heckelab {

// ---------------------------------------------------------------- LaurentQ

LaurentQ::LaurentQ(const Rat& c, long exponent) : low_(exponent), poly_(QPoly::constant(c)) {
    if (poly_.is_zero()) low_ = 0;
}

LaurentQ::LaurentQ(long shift, const QPoly& p) {
    if (p.is_zero()) return;
    std::size_t v = p.valuation();
    low_ = shift + static_cast<long>(v);
    poly_ = p.shifted_down(v);
}

LaurentQ LaurentQ::from_terms(const std::map<long, Rat>& terms) {
    LaurentQ r;
    for (const auto& [k, c] : terms) r += LaurentQ(c, k);
    return r;
}

Rat LaurentQ::coefficient(long k) const {
    if (is_zero() || k < low_) return Rat();
    return poly_.coeff(static_cast<std::size_t>(k - low_));
}

std::vector<std::pair<long, Rat>> LaurentQ::terms() const {
    std::vector<std::pair<long, Rat>> out;
    const auto& c = poly_.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) out.emplace_back(low_ + static_cast<long>(i), c[i]);
    return out;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    long low = std::min(low_, o.low_);
    QPoly sum = poly_.shifted_up(static_cast<std::size_t>(low_ - low)) +
                o.poly_.shifted_up(static_cast<std::size_t>(o.low_ - low));
    *this = LaurentQ(low, sum);
    return *this;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentQ r;
    r.low_ = a.low_ + b.low_;
    r.poly_ = a.poly_ * b.poly_;  // constant terms nonzero, product keeps it
    return r;
}

LaurentQ operator-(const LaurentQ& a) {
    LaurentQ r = a;
    r.poly_ = -r.poly_;
    return r;
}

// ---------------------------------------------------------------- QScalar

QScalar::QScalar(const LaurentQ& num, const LaurentQ& den) {
    if (den.is_zero()) throw FieldError("division by the zero polynomial");
    num_ = num.is_zero() ? LaurentQ() : LaurentQ(num.low() - den.low(), num.poly());
    den_ = den.poly();
    normalize();
}

void QScalar::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly::constant(Rat(1));
        return;
    }
    if (den_.is_one()) return;
    std::size_t v = den_.valuation();
    if (v) {
        den_ = den_.shifted_down(v);
        num_ = LaurentQ(num_.low() - static_cast<long>(v), num_.poly());
    }
    if (!den_.is_constant()) {
        QPoly g = gcd(num_.poly(), den_);
        if (g.degree() > 0) {
            num_ = LaurentQ(num_.low(), num_.poly().exact_div(g));
            den_ = den_.exact_div(g);
        }
    }
    const Rat c = den_.coeff(0);
    if (!c.is_one()) {
        Rat ic = c.inverse();
        num_ = LaurentQ(num_.low(), num_.poly() * ic);
        den_ *= ic;
    }
}

bool QScalar::is_one() const {
    return den_.is_one() && num_.low() == 0 && num_.poly().is_one();
}

bool QScalar::is_constant() const {
    return is_zero() || (den_.is_one() && num_.low() == 0 && num_.poly().is_constant());
}

std::size_t QScalar::complexity() const {
    if (is_zero()) return 0;
    std::size_t bits = 0;
    for (const auto& c : num_.poly().coeffs()) bits += c.bit_size();
    for (const auto& c : den_.coeffs()) bits += c.bit_size();
    return bits;
}

QScalar QScalar::inverse() const {
    if (is_zero()) throw FieldError("division by zero in Q(q)");
    QScalar r;
    r.num_ = LaurentQ(-num_.low(), den_);
    r.den_ = num_.poly();
    const Rat c = r.den_.coeff(0);
    if (!c.is_one()) {
        Rat ic = c.inverse();
        r.num_ = LaurentQ(r.num_.low(), r.num_.poly() * ic);
        r.den_ *= ic;
    }
    return r;
}

QScalar QScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QScalar result(1);
    QScalar base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

QScalar& QScalar::operator+=(const QScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    QPoly g = gcd(den_, o.den_);
    QPoly a_cof = den_, b_cof = o.den_;
    if (g.degree() > 0) {
        a_cof = den_.exact_div(g);
        b_cof = o.den_.exact_div(g);
    }
    num_ = num_ * LaurentQ(0, b_cof) + o.num_ * LaurentQ(0, a_cof);
    den_ = den_ * b_cof;
    normalize();
    return *this;
}

QScalar& QScalar::operator*=(const QScalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = QScalar();
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    QPoly an = num_.poly(), ad = den_, bn = o.num_.poly(), bd = o.den_;
    if (!bd.is_one()) {
        QPoly g = gcd(an, bd);
        if (g.degree() > 0) {
            an = an.exact_div(g);
            bd = bd.exact_div(g);
        }
    }
    if (!ad.is_one()) {
        QPoly g = gcd(bn, ad);
        if (g.degree() > 0) {
            bn = bn.exact_div(g);
            ad = ad.exact_div(g);
        }
    }
    num_ = LaurentQ(num_.low() + o.num_.low(), an * bn);
    den_ = ad * bd;
    const Rat c = den_.coeff(0);
    if (!c.is_one()) {
        Rat ic = c.inverse();
        num_ = LaurentQ(num_.low(), num_.poly() * ic);
        den_ *= ic;
    }
    return *this;
}

QScalar operator-(const QScalar& a) {
    QScalar r = a;
    r.num_ = -r.num_;
    return r;
}

// ---------------------------------------------------------------- formatting

namespace {

std::string format_term(const Rat& abs_coef, long k) {
    std::string qpart;
    if (k == 1) {
        qpart = "q";
    } else if (k != 0) {
        qpart = "q^" + std::to_string(k);
    }
    if (qpart.empty()) return abs_coef.str();
    if (abs_coef.is_one()) return qpart;
    return abs_coef.str() + "*" + qpart;
}

}  // namespace

std::string format_laurent(const LaurentQ& x) {
    if (x.is_zero()) return "0";
    auto terms = x.terms();
    std::string out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [k, c] = *it;
        bool neg = c.sign() < 0;
        Rat a = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += format_term(a, k);
        first = false;
    }
    return out;
}

std::string QScalar::str() const {
    if (den_.is_one()) return format_laurent(num_);
    return "(" + format_laurent(num_) + ")/(" + format_laurent(LaurentQ(0, den_)) + ")";
}

std::size_t QScalar::hash() const { return std::hash<std::string>{}(str()); }

// ---------------------------------------------------------------- parsing

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view s) : s_(s) {}

    QScalar parse() {
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            LaurentQ num = sum();
            expect(')');
            expect('/');
            expect('(');
            LaurentQ den = sum();
            expect(')');
            skip_ws();
            if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
            if (den.is_zero()) throw FieldError("division by the zero polynomial");
            return QScalar(num, den);
        }
        LaurentQ v = sum();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
        return QScalar(v);
    }

private:
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    LaurentQ sum() {
        LaurentQ acc;
        bool negate = false;
        char c = peek();
        if (c == '-' || c == '+') {
            negate = c == '-';
            ++pos_;
        }
        LaurentQ t = term();
        acc += negate ? -t : t;
        for (;;) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            t = term();
            acc += c == '-' ? -t : t;
        }
        return acc;
    }

    LaurentQ term() {
        char c = peek();
        if (c == 'q') return LaurentQ(Rat(1), qpow());
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("expected a term", pos_);
        Rat coef = rat();
        c = peek();
        if (c == '*') {
            ++pos_;
            if (peek() != 'q') throw ParseError("expected 'q' after '*'", pos_);
            return LaurentQ(coef, qpow());
        }
        if (c == 'q') return LaurentQ(coef, qpow());
        return LaurentQ(coef, 0);
    }

    long qpow() {
        expect('q');
        if (peek() != '^') return 1;
        ++pos_;
        bool neg = false;
        char c = peek();
        if (c == '-' || c == '+') {
            neg = c == '-';
            ++pos_;
        }
        mpz_class e = digits();
        if (!e.fits_slong_p()) throw ParseError("exponent out of range", pos_);
        long v = e.get_si();
        return neg ? -v : v;
    }

    Rat rat() {
        mpz_class n = digits();
        std::size_t save = pos_;
        if (peek() == '/') {
            // A '/' followed by '(' belongs to the fraction form, not to a rational.
            std::size_t slash = pos_;
            ++pos_;
            if (peek() == '(') {
                pos_ = save;
                return Rat(n);
            }
            mpz_class d = digits();
            if (d == 0) throw ParseError("zero denominator in rational", slash + 1);
            return Rat(n, d);
        }
        return Rat(n);
    }

    mpz_class digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected digits", pos_);
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

QScalar QScalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

// ---------------------------------------------------------------- q-combinatorics

QScalar q_number(long p) {
    if (p < 1) throw ArgumentError("q_number requires p >= 1");
    std::map<long, Rat> terms;
    for (long k = p - 1; k >= 1 - p; k -= 2) terms[k] = Rat(1);
    return QScalar(LaurentQ::from_terms(terms));
}

QScalar q_factorial(long p) {
    if (p < 0) throw ArgumentError("q_factorial requires p >= 0");
    QScalar r(1);
    for (long k = 2; k <= p; ++k) r *= q_number(k);
    return r;
}

QScalar q_binomial(long p, long i) {
    if (i < 0 || i > p) throw ArgumentError("q_binomial requires 0 <= i <= p");
    return q_factorial(p) / (q_factorial(i) * q_factorial(p - i));
}

}  // namespace heckelab
