#include "spikeclust/alphabet.hpp"

#include "spikeclust/common.hpp"

namespace spikeclust {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) fail_arg("alphabet must not be empty");
  index_.fill(-1);
  for (int i = 0; i < static_cast<int>(symbols_.size()); ++i) {
    const auto c = static_cast<unsigned char>(symbols_[static_cast<std::size_t>(i)]);
    if (index_[c] >= 0) {
      fail_arg(cat("alphabet has duplicate symbol '", symbols_[static_cast<std::size_t>(i)], "'"));
    }
    index_[c] = i;
  }
}

const Alphabet& Alphabet::amino_acids() {
  static const Alphabet a("ACDEFGHIKLMNPQRSTVWXY");
  return a;
}

}  // namespace spikeclust
