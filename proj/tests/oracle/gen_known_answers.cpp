// Prints known-answer records from the naive oracle:
//   variant, key_hex, pt_hex, rounds, ct_hex
// Output is frozen into data/known_answers.txt.

#include <cstdio>
#include <random>

#include "naive_eelwe.hpp"

int
main()
{
  std::mt19937_64 rng(0x4545'4C57'45ULL);
  std::printf("# variant, key_hex, pt_hex, rounds, ct_hex (naive bit-array model, seed 0x45454C5745)\n");
  for (int n : { 32, 48, 64 }) {
    for (int i = 0; i < 5; ++i) {
      const std::uint64_t lo = rng();
      const auto hi = static_cast<std::uint16_t>(rng());
      const std::uint64_t mask = n == 64 ? ~0ULL : (1ULL << n) - 1;
      const std::uint64_t pt = rng() & mask;
      const auto key = oracle::key_from_words(lo, hi);
      for (int rounds : { 1, 16, 254 }) {
        const std::uint64_t ct = oracle::encrypt(n, pt, key, rounds);
        if (oracle::decrypt(n, ct, key, rounds) != pt) return 1;
        std::printf("e%d, %04X%016llX, %0*llX, %d, %0*llX\n", n, hi, static_cast<unsigned long long>(lo), n / 4,
                    static_cast<unsigned long long>(pt), rounds, n / 4, static_cast<unsigned long long>(ct));
      }
    }
  }
  return 0;
}
