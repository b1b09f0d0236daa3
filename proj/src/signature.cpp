#include "relex/signature.hpp"

#include <stdexcept>

namespace relex {

Signature::Signature(std::vector<int> arities) : arities_(std::move(arities)) {
  while (!arities_.empty() && arities_.back() == 0) arities_.pop_back();
  for (int a : arities_) {
    if (a < 0) throw std::invalid_argument("signature: negative arity");
    if (a == 0)
      throw std::invalid_argument(
          "signature: zero arity followed by a non-zero arity");
  }
}

Signature graded_signature(std::size_t max_arity) {
  std::vector<int> arities(max_arity);
  for (std::size_t j = 0; j < max_arity; ++j) arities[j] = static_cast<int>(j + 1);
  return Signature(std::move(arities));
}

}  // namespace relex
