#pragma once

#include <optional>
#include <string>

namespace consec {

enum class Outcome { yes, no, degenerate };

// Answer to a yes/no question plus evidence for a negative answer.
template <class Witness>
struct Decision {
  Outcome outcome = Outcome::yes;
  std::string degenerate_tag;  // set when outcome == degenerate, e.g. "degenerate: empty class"
  std::optional<Witness> witness;
  std::string explanation;
  std::string note;  // flag attached to a boolean answer, e.g. "degenerate: empty basis"

  bool holds() const { return outcome == Outcome::yes; }
  bool fails() const { return outcome == Outcome::no; }
};

}  // namespace consec
