#include "qquad/parse.hpp"

#include <charconv>

namespace qquad {

namespace {

uint64_t parse_u64(const std::string& s) {
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(ErrorCode::ParseError, "not a nonnegative integer: '" + s + "'");
  return v;
}

}  // namespace

FieldSpec parse_field_spec(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty field spec");
  auto caret = s.find('^');
  if (caret != std::string::npos) {
    uint64_t p = parse_u64(s.substr(0, caret));
    uint64_t m = parse_u64(s.substr(caret + 1));
    if (p == 0 || p > 0xffff || m == 0 || m > 0xffff)
      throw Error(ErrorCode::ParseError, "field spec out of range: '" + s + "'");
    return {uint32_t(p), uint32_t(m)};
  }
  // Bare prime power: factor it.
  uint64_t q = parse_u64(s);
  if (q < 2) throw Error(ErrorCode::ParseError, "field spec out of range: '" + s + "'");
  uint64_t p = q;
  for (uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  uint32_t m = 0;
  uint64_t t = q;
  while (t % p == 0) {
    t /= p;
    ++m;
  }
  if (t != 1)
    throw Error(ErrorCode::ParseError, "'" + s + "' is not a prime power");
  return {uint32_t(p), m};
}

std::string format_field_spec(const FieldCtx& F) {
  return std::to_string(F.p()) + "^" + std::to_string(F.m());
}

std::string format_elem(const FieldCtx& F, const Fq2Elem& x) {
  std::string out;
  auto cs = x.coeffs();
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(cs[i]);
  }
  return out;
}

Fq2Elem parse_elem(const FieldCtx& F, const std::string& s) {
  std::vector<uint32_t> coeffs;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                 : comma - start);
    if (tok.empty())
      throw Error(ErrorCode::ParseError, "empty coefficient in '" + s + "'");
    uint64_t v = parse_u64(tok);
    if (v >= F.p())
      throw Error(ErrorCode::ParseError,
                  "coefficient " + tok + " is not a residue mod " + std::to_string(F.p()));
    coeffs.push_back(uint32_t(v));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return F.from_coeffs(coeffs);
}

std::vector<Fq2Elem> parse_elem_list(const FieldCtx& F, const std::string& s) {
  std::vector<Fq2Elem> out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t semi = s.find(';', start);
    std::string tok = s.substr(start, semi == std::string::npos ? std::string::npos
                                                                : semi - start);
    out.push_back(parse_elem(F, tok));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace qquad
