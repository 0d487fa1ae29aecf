#pragma once

#include <string>
#include <vector>

#include "opw/diagram.hpp"
#include "opw/poset.hpp"

namespace opw {

struct Params {
  int m = 2;
  int n = 2;
  int d = 1;
  int ell = 1;

  Params() = default;
  Params(int m_, int n_);

  friend bool operator==(const Params&, const Params&) = default;
};

enum class Shape : uint8_t { SPow, TPow, ST, STS, TS, TST };

struct NormalForm {
  Shape shape = Shape::SPow;
  int exp = 1;

  int length() const;
  char first() const;
  char last() const;
  bool has_s() const;
  bool has_t() const;
  std::string word() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

std::vector<NormalForm> wset(const Params& p);
int wset_index(const NormalForm& a, const Params& p);

NormalForm multiply(const NormalForm& a, const NormalForm& b, const Params& p);
NormalForm normal_form(const std::string& word, const Params& p);

std::vector<std::vector<uint8_t>> word_order(const Params& p);
bool leq(const NormalForm& a, const NormalForm& b, const Params& p);

int idempotent_exponent(const Params& p);

std::string negate(const std::string& word);

DiagramCatalog hasse(const Params& p);

EndoMap eval_st_word(const std::string& word, const EndoMap& s, const EndoMap& t);

}  // namespace opw
