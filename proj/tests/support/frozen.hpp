#pragma once

// Frozen oracle values for the alpha = 1/sqrt(1-y^2) cross-check profile,
// computed independently with 30-digit arithmetic from the closed-form
// antiderivatives of the recursion integrands. These pin both the library
// and the closed-form expressions it is compared against.

namespace frozen {

// int_0^{1/2} (1-t^2)^{3/2} dt  =  Y^(1)(0, 1/2)
inline constexpr double Y1_half = 0.43991918566373545;

// int_0^{1/2} (1-t^2)^{-3/2} dt  =  Yt^(1)(0, 1/2)  =  1/sqrt(3)
inline constexpr double Yt1_half = 0.57735026918962576;

inline constexpr double asin_half = 0.52359877559829887;
inline constexpr double alpha_half = 1.1547005383792515;   // 1/sqrt(0.75)
inline constexpr double f0_half = 0.80592744886765644;     // 0.75^{3/4}

inline constexpr double Y2_half = 0.28922492052927723;
inline constexpr double Yt2_half = 0.21875;                // 1/4 - 1/32 exactly
inline constexpr double Y3_half = 0.1063283094503722;
inline constexpr double Yt3_half = 0.14856679566655;

// *Z^(2)(i, 0; 0.3 + 0.5 i) = -2 x Yt1 + i (x^2 - Yt2)
inline constexpr double Z2i_re = -0.34641016151377546;
inline constexpr double Z2i_im = -0.12875;

// *Z^(2)(1, 0; 0.3 + 0.5 i) = (x^2 - Y2) + 2 i x Y1
inline constexpr double Z2u_re = -0.19922492052927723;
inline constexpr double Z2u_im = 0.26395151139824127;

} // namespace frozen
