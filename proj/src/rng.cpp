#include "hpa/rng.hpp"

#include <vector>

namespace hpa {

BigInt CounterRng::below(const BigInt& bound) {
  if (bound.fits_ulong_p()) return BigInt(below(static_cast<std::uint64_t>(bound.get_ui())));
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - (words - 1) * 64);
  const std::uint64_t top_mask = top_bits == 64 ? ~0ULL : ((1ULL << top_bits) - 1);
  std::vector<std::uint64_t> buf(words);
  BigInt v;
  for (;;) {
    for (auto& w : buf) w = next();
    buf.back() &= top_mask;  // most significant word last
    mpz_import(v.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
    if (v < bound) return v;
  }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ a);
  h = mix64(h ^ (b + 0x632be59bd9b4e019ULL));
  h = mix64(h ^ (c + 0x85157af5ULL));
  return h;
}

}  // namespace hpa
