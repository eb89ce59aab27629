// Universality certificates for k = 2..12 with the trace values behind each verdict.

#include <cstdio>

#include "su2k/universality/certificate.hpp"

int main() {
  for (int k = 2; k <= 12; ++k) {
    const su2k::Certificate c = su2k::kitaev_certificate(su2k::Level(k));
    std::printf("k=%2d  trA=% .6f  trB=% .6f  trW=% .6f  %s", k, c.tr_a.value, c.tr_b.value, c.tr_w.value, c.verdict().c_str());
    if (!c.dense) std::printf("  (%s)", c.reason.c_str());
    std::printf("\n");
  }
}
