#pragma once

#include <string>
#include <vector>

#include "qquad/field.hpp"

namespace qquad {

struct FieldSpec {
  uint32_t p = 0;
  uint32_t m = 0;
};

/// Parses a field specification: "p^m" (e.g. "3^2"), or a bare prime power
/// ("9" means 3^2). Throws ParseError / NotPrime.
FieldSpec parse_field_spec(const std::string& s);

std::string format_field_spec(const FieldCtx& F);

/// Element <-> "c0,c1,...,c_{2m-1}" (little-endian residues mod p). Parsing
/// accepts shorter lists and zero-pads; formatting always emits 2m entries.
std::string format_elem(const FieldCtx& F, const Fq2Elem& x);
Fq2Elem parse_elem(const FieldCtx& F, const std::string& s);

/// Semicolon-separated element list, e.g. "1,2;0,1;2,0".
std::vector<Fq2Elem> parse_elem_list(const FieldCtx& F, const std::string& s);

}  // namespace qquad
