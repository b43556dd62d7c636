#include "heckelab/rat.hpp"

#include <cctype>

namespace heckelab {

Rat::Rat(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw FieldError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational", 0);
    std::size_t slash = s.find('/');
    auto check_digits = [&](std::size_t from, std::size_t to, bool allow_sign) {
        std::size_t i = from;
        if (allow_sign && i < to && (s[i] == '-' || s[i] == '+')) ++i;
        if (i == to) throw ParseError("expected digits in rational", i);
        for (; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw ParseError("unexpected character in rational", i);
    };
    if (slash == std::string::npos) {
        check_digits(0, s.size(), true);
        std::string body = s[0] == '+' ? s.substr(1) : s;
        return Rat(mpz_class(body));
    }
    check_digits(0, slash, true);
    check_digits(slash + 1, s.size(), false);
    std::string n = s.substr(0, slash);
    if (n[0] == '+') n.erase(0, 1);
    mpz_class d(s.substr(slash + 1));
    if (d == 0) throw ParseError("zero denominator in rational", slash + 1);
    return Rat(mpz_class(n), d);
}

std::size_t Rat::bit_size() const {
    return mpz_sizeinbase(v_.get_num_mpz_t(), 2) + mpz_sizeinbase(v_.get_den_mpz_t(), 2);
}

Rat Rat::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rat(std::move(r));
}

Rat Rat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(mpq_class(n, d));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw FieldError("division by zero");
    v_ /= o.v_;
    return *this;
}

}  // namespace heckelab
