#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "rescoh/extensions.hpp"

namespace rescoh {

// Error in an input document, carrying a field path in the message.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TermList {
  // (label, coefficient) pairs; coefficients are residues mod p.
  std::vector<std::pair<std::string, std::uint32_t>> terms;
  friend bool operator==(const TermList&, const TermList&) = default;
};

struct BracketEntry {
  std::string left, right;
  TermList value;
  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

struct PImageEntry {
  std::string on;
  TermList value;
  friend bool operator==(const PImageEntry&, const PImageEntry&) = default;
};

// On-disk description of an algebra: unlisted brackets are zero, and the
// super-skew counterpart of a listed pair may be omitted.
struct AlgebraDocument {
  std::uint32_t p = 3;
  std::vector<std::string> even_basis, odd_basis;
  std::vector<BracketEntry> brackets;
  std::vector<PImageEntry> p_operator;
  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

AlgebraDocument parse_document(const std::string& text);
// Canonical form: sorted JSON keys, bracket entries sorted by basis index,
// terms sorted by basis index, zero terms dropped. Basis order is semantic
// and is kept as written.
std::string serialize_document(const AlgebraDocument& doc);

std::shared_ptr<const LieSuperalgebra> algebra_from(const AlgebraDocument& doc);
POperator p_operator_from(const AlgebraDocument& doc,
                          std::shared_ptr<const LieSuperalgebra> alg);
bool has_p_operator(const AlgebraDocument& doc);

AlgebraDocument document_from(const POperator& op);

// Report fragments; plain nlohmann::json keeps keys sorted, which makes
// every report byte-deterministic.
nlohmann::json algebra_json(const LieSuperalgebra& alg);
nlohmann::json validation_json(const ValidationReport& rep);
nlohmann::json restrictedness_json(const RestrictednessReport& rep);
nlohmann::json cohomology_json(const CohomologyReport& rep, const RestrictedComplex* rc);
nlohmann::json sixterm_json(const SixTermReport& rep);

// "x1^y2", "frob:x3", "frob:3" (1-based even index) or sugar "x^{1,2}".
RestrictedCochain2 parse_cocycle_name(const RestrictedComplex& rc, const std::string& name);

}  // namespace rescoh
