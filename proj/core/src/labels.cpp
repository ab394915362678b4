#include "hitratio/labels.hpp"

namespace hitratio {

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string canonical_label(std::string_view label) {
  if (!label.empty() && label.front() == '#') label.remove_prefix(1);
  return ascii_lower(label);
}

std::string display_label(std::string_view label) {
  return "#" + canonical_label(label);
}

}  // namespace hitratio
