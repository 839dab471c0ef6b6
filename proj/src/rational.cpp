#include "tjurina/rational.hpp"

#include <limits>
#include <stdexcept>

#include "tjurina/errors.hpp"

namespace tjurina {

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational literal: " + text);
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_pow(const Rat& q, unsigned long e) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
    // num/den already coprime, so the power is canonical.
    return out;
}

Int binomial(unsigned long n, unsigned long k) {
    Int out;
    if (k > n) return Int(0);
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

long long to_longlong(const Int& z) {
    if (!z.fits_slong_p()) fail(ErrorCode::BadInput, "integer out of supported range: " + z.get_str());
    return static_cast<long long>(z.get_si());
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NotHomogeneous: return "NotHomogeneous";
        case ErrorCode::ConeInput: return "ConeInput";
        case ErrorCode::NonIsolatedOrBug: return "NonIsolatedOrBug";
        case ErrorCode::NoStabilization: return "NoStabilization";
        case ErrorCode::DimensionNotOne: return "DimensionNotOne";
        case ErrorCode::NotSingular: return "NotSingular";
        case ErrorCode::WrongDimension: return "WrongDimension";
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::BoundViolation: return "BoundViolation";
        case ErrorCode::BadInput: return "BadInput";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace tjurina
