#include "chroma/verdict.hpp"

namespace chroma {

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kConfirmed: return "confirmed";
    case VerdictStatus::kRefuted: return "refuted";
    case VerdictStatus::kNotApplicable: return "not-applicable";
  }
  return "?";
}

}  // namespace chroma
