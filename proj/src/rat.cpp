#include "tritile/rat.hpp"

namespace tritile {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rat: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rat q;
        if (q.set_str(text, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + text + "'");
        if (q.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rat q;
        if (q.set_str(text, 10) != 0) throw std::invalid_argument("parse_rat: bad integer '" + text + "'");
        return q;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("parse_rat: bad decimal '" + text + "'");
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac_len));
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rat> rat_sqrt_exact(const Rat& q) {
    if (q < 0) return std::nullopt;
    mpz_class num_root, den_root;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t())) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_den().get_mpz_t())) return std::nullopt;
    mpz_sqrt(num_root.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), q.get_den().get_mpz_t());
    return Rat(num_root, den_root);
}

}  // namespace tritile
