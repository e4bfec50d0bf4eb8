#pragma once

// Naive bit-array model of the cipher, used only as a test oracle. It keeps
// every register as a vector of single bits and addresses taps through the
// Pa/Pb/Pc/Pd sub-block views, so it shares no code path with the packed
// implementation in core/.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

using Bits = std::vector<int>; // index 0 = least significant

struct Layout
{
  int n, p1, p2, pa, pb, pc, pd;
  std::array<int, 2> a;
  std::array<int, 3> b;
  std::array<int, 2> c;
  std::array<int, 4> d;
  int steps;
};

inline Layout
layout(int n)
{
  switch (n) {
    case 32: return { 32, 13, 19, 6, 7, 8, 11, { 5, 2 }, { 6, 3, 1 }, { 7, 3 }, { 10, 7, 5, 1 }, 1 };
    case 48: return { 48, 19, 29, 8, 11, 12, 17, { 7, 3 }, { 10, 6, 4 }, { 11, 5 }, { 16, 12, 8, 3 }, 2 };
    case 64: return { 64, 25, 39, 10, 17, 14, 23, { 9, 5 }, { 16, 11, 7 }, { 13, 7 }, { 22, 17, 11, 5 }, 3 };
  }
  throw std::invalid_argument("oracle: unsupported block size");
}

inline Bits
key_from_words(std::uint64_t lo, std::uint16_t hi)
{
  Bits k(80);
  for (int i = 0; i < 64; ++i)
    k[i] = (lo >> i) & 1;
  for (int i = 0; i < 16; ++i)
    k[64 + i] = (hi >> i) & 1;
  return k;
}

inline Bits
expand(const Bits& key80)
{
  Bits k = key80;
  k.resize(508);
  for (int j = 80; j < 508; ++j)
    k[j] = k[j - 80] ^ k[j - 61] ^ k[j - 50] ^ k[j - 13];
  return k;
}

// s[t+8] = s[t+7] ^ s[t+5] ^ s[t+3] ^ s[t], s[0..7] = 1
inline Bits
ir_bits()
{
  Bits s(254 + 8, 0);
  for (int t = 0; t < 8; ++t)
    s[t] = 1;
  for (int t = 0; t + 8 < static_cast<int>(s.size()); ++t)
    s[t + 8] = s[t + 7] ^ s[t + 5] ^ s[t + 3] ^ s[t];
  s.resize(254);
  return s;
}

struct Regs
{
  Bits P1, P2;
};

class SubBlock
{
public:
  SubBlock(Bits& reg, int offset)
    : reg_(reg)
    , offset_(offset)
  {}
  int operator[](int i) const { return reg_[offset_ + i]; }

private:
  Bits& reg_;
  int offset_;
};

inline void
shl(Bits& reg, int in)
{
  for (int i = static_cast<int>(reg.size()) - 1; i > 0; --i)
    reg[i] = reg[i - 1];
  reg[0] = in;
}

inline void
step(Regs& r, const Layout& L, int kx, int ky, int ir)
{
  SubBlock Pa(r.P1, L.p1 - L.pa), Pb(r.P1, 0);
  SubBlock Pc(r.P2, L.p2 - L.pc), Pd(r.P2, 0);
  const int Ta = (Pa[L.a[0]] ^ Pa[L.a[1]]) ^ kx;
  const int Tb = (Pb[L.b[0]] & Pb[L.b[1]]) ^ (Pb[L.b[2]] & ir);
  const int fx = Ta ^ Tb;
  const int Tc = (Pc[L.c[0]] ^ Pc[L.c[1]]) ^ ky;
  const int Td = (Pd[L.d[0]] & Pd[L.d[1]]) ^ (Pd[L.d[2]] & Pd[L.d[3]]);
  const int fy = Tc ^ Td;
  shl(r.P1, fy);
  shl(r.P2, fx);
}

// Inverse by exhaustive search over the two bits the forward step drops.
inline void
unstep(Regs& r, const Layout& L, int kx, int ky, int ir)
{
  int found = 0;
  Regs answer;
  for (int t1 = 0; t1 < 2; ++t1) {
    for (int t2 = 0; t2 < 2; ++t2) {
      Regs cand{ Bits(r.P1.begin() + 1, r.P1.end()), Bits(r.P2.begin() + 1, r.P2.end()) };
      cand.P1.push_back(t1);
      cand.P2.push_back(t2);
      Regs fwd = cand;
      step(fwd, L, kx, ky, ir);
      if (fwd.P1 == r.P1 && fwd.P2 == r.P2) {
        ++found;
        answer = cand;
      }
    }
  }
  if (found != 1) throw std::logic_error("oracle: step is not uniquely invertible");
  r = answer;
}

inline Regs
load(std::uint64_t block, const Layout& L)
{
  Regs r{ Bits(L.p1), Bits(L.p2) };
  for (int i = 0; i < L.p2; ++i)
    r.P2[i] = (block >> i) & 1;
  for (int i = 0; i < L.p1; ++i)
    r.P1[i] = (block >> (L.p2 + i)) & 1;
  return r;
}

inline std::uint64_t
unload(const Regs& r, const Layout& L)
{
  std::uint64_t v = 0;
  for (int i = 0; i < L.p2; ++i)
    v |= std::uint64_t(r.P2[i]) << i;
  for (int i = 0; i < L.p1; ++i)
    v |= std::uint64_t(r.P1[i]) << (L.p2 + i);
  return v;
}

inline std::uint64_t
encrypt(int n, std::uint64_t pt, const Bits& key80, int rounds)
{
  const Layout L = layout(n);
  const Bits k = expand(key80);
  const Bits ir = ir_bits();
  Regs r = load(pt, L);
  for (int i = 0; i < rounds; ++i)
    for (int s = 0; s < L.steps; ++s)
      step(r, L, k[2 * i], k[2 * i + 1], ir[i]);
  return unload(r, L);
}

inline std::uint64_t
decrypt(int n, std::uint64_t ct, const Bits& key80, int rounds)
{
  const Layout L = layout(n);
  const Bits k = expand(key80);
  const Bits ir = ir_bits();
  Regs r = load(ct, L);
  for (int i = rounds - 1; i >= 0; --i)
    for (int s = 0; s < L.steps; ++s)
      unstep(r, L, k[2 * i], k[2 * i + 1], ir[i]);
  return unload(r, L);
}

} // namespace oracle
