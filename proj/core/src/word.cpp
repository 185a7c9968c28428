#include "cantor/word.hpp"

#include "cantor/error.hpp"

namespace cantor {

Word::Word(std::uint64_t index, int depth) : index_(index), depth_(depth) {
  if (depth < 0 || depth > kMaxDepth) {
    throw Error(Errc::DepthCapExceeded, "word depth " + std::to_string(depth) + " out of range");
  }
  if (depth < 64 && (index >> depth) != 0) {
    throw Error(Errc::InvalidArgument, "word index does not fit its depth");
  }
}

Word Word::parse(std::string_view text) {
  if (text == "-") return Word{};
  if (text.empty() || static_cast<int>(text.size()) > kMaxDepth) {
    throw Error(Errc::Parse, "bad word '" + std::string(text) + "'");
  }
  std::uint64_t index = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw Error(Errc::Parse, "bad word '" + std::string(text) + "'");
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return Word(index, static_cast<int>(text.size()));
}

Word Word::prefix(int k) const {
  if (k < 0 || k > depth_) throw Error(Errc::InvalidArgument, "prefix length out of range");
  return Word(index_ >> (depth_ - k), k);
}

Word Word::append(int b) const { return Word((index_ << 1) | static_cast<std::uint64_t>(b & 1), depth_ + 1); }

bool Word::is_prefix_of(const Word& other) const {
  return depth_ <= other.depth_ && (other.index_ >> (other.depth_ - depth_)) == index_;
}

std::string Word::str() const {
  if (depth_ == 0) return "-";
  std::string out(static_cast<std::size_t>(depth_), '0');
  for (int i = 0; i < depth_; ++i) out[static_cast<std::size_t>(i)] = static_cast<char>('0' + bit(i));
  return out;
}

}  // namespace cantor
