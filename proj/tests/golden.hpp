// Reference values from tests/oracles/pv_golden.py (40-digit mpmath, checked
// against sympy partial fractions). Form factor p = 1, n = 2, Lambda = 10;
// g2 = 1e-3, omega0 = 1.

#pragma once

namespace golden {

inline constexpr double kChi2At1 = 0.098029604940692089011;
inline constexpr double kChi2At3 = 0.25250399797996801616;

// P Int_0^inf chi2(w) / (w - eta) dw
inline constexpr double kPvEta0p5 = 0.90363495915239754829;
inline constexpr double kPvEta1 = 0.93844004613555376426;
inline constexpr double kPvEta1p5 = 0.93314334797509619666;
inline constexpr double kPvEta2p5 = 0.84158615338083250489;
inline constexpr double kPvEtaMinus0p5 = 0.6554293113214521195;

inline constexpr double kDeltaEFgr = 0.00093844004613555376426;
inline constexpr double kDeltaEB0p5 = 0.00091838915356374687247;
inline constexpr double kDeltaEB1p5 = 0.00074850773235114231219;

} // namespace golden
