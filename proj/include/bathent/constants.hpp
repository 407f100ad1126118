// constants.hpp — SI physical constants, frozen at 7 significant figures

#pragma once

namespace bathent::si {

inline constexpr double hbar = 1.054572e-34;      // J s
inline constexpr double k_B = 1.380649e-23;       // J / K
inline constexpr double e = 1.602177e-19;         // C
inline constexpr double mu_0 = 1.256637e-6;       // N / A^2
inline constexpr double c_0 = 2.997925e8;         // m / s
inline constexpr double epsilon_0 = 1.0 / (mu_0 * c_0 * c_0); // F / m, derived
inline constexpr double electron_volt = e;        // J

inline constexpr double pi = 3.141592653589793238462643383279502884;

} // namespace bathent::si
