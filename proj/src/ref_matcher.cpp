#include "amac/ref_matcher.hpp"

namespace amac {

RefMatcher::RefMatcher(std::string_view reference) : ref_(reference) {
  if (ref_.empty()) {
    throw InvalidIdentifier("identifier must be non-empty");
  }
  for (unsigned char c : ref_) {
    if (c > 127) {
      throw InvalidIdentifier("identifier must be ASCII (byte " +
                              std::to_string(c) + " out of range)");
    }
  }
}

bool RefMatcher::feed(unsigned char c) {
  if (c != static_cast<unsigned char>(ref_[cursor_])) return false;
  cursor_ = (cursor_ + 1) % ref_.size();
  return true;
}

}  // namespace amac
