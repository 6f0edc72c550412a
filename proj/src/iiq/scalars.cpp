#include "scalars.hpp"

namespace iiq {

bool is_prime_u64(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(unsigned long p) {
    require(is_prime_u64(p), "field characteristic must be prime, got " + std::to_string(p));
    require(p != 2 && p != 3, "characteristics 2 and 3 are not supported");
    Field f;
    f.kind = Kind::prime;
    f.p = p;
    return f;
}

Scalar Field::reduce(const Scalar& x) const {
    if (kind == Kind::rational) return x;
    mpz_class mod(static_cast<unsigned long>(p));
    mpz_class den = x.get_den();
    mpz_class num = x.get_num() % mod;
    if (num < 0) num += mod;
    if (den != 1) {
        mpz_class d = den % mod;
        if (d < 0) d += mod;
        mpz_class dinv;
        int ok = mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t());
        require(ok != 0, "denominator not invertible mod " + std::to_string(p));
        num = (num * dinv) % mod;
    }
    return Scalar(num);
}

Scalar Field::inv(const Scalar& a) const {
    require(!is_zero(a), "division by zero");
    if (kind == Kind::rational) return Scalar(1) / a;
    mpz_class mod(static_cast<unsigned long>(p));
    Scalar r = reduce(a);
    mpz_class num = r.get_num();
    mpz_class ainv;
    int ok = mpz_invert(ainv.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
    require(ok != 0, "element not invertible mod " + std::to_string(p));
    return Scalar(ainv);
}

std::string scalar_to_string(const Scalar& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

Scalar parse_scalar(const Field& f, const std::string& token) {
    auto bad = [&] { fail(Errc::parse, "bad scalar token '" + token + "'"); };
    if (token.empty()) bad();
    std::string num = token, den;
    if (auto pos = token.find('/'); pos != std::string::npos) {
        if (f.is_prime_field())
            fail(Errc::parse, "denominators are not allowed over " + f.to_string());
        num = token.substr(0, pos);
        den = token.substr(pos + 1);
        if (den.empty()) bad();
    }
    auto check_int = [&](std::string& s) {
        if (s[0] == '+') s.erase(0, 1);
        size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (i == s.size() || s.empty()) bad();
        for (; i < s.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(s[i]))) bad();
    };
    check_int(num);
    if (!den.empty()) check_int(den);
    Scalar v;
    try {
        v = den.empty() ? Scalar(mpz_class(num)) : Scalar(mpz_class(num), mpz_class(den));
    } catch (const std::invalid_argument&) {
        bad();
    }
    require(v.get_den() != 0, "zero denominator in '" + token + "'", Errc::parse);
    v.canonicalize();
    return f.reduce(v);
}

}  // namespace iiq
