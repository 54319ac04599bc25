#include "dsem/modes.hpp"

#include <string>

namespace dsem {

const char* to_string(Parity p) { return p == Parity::Magnetic ? "magnetic" : "electric"; }

Parity parse_parity(const std::string& s) {
  if (s == "magnetic" || s == "M" || s == "m") return Parity::Magnetic;
  if (s == "electric" || s == "E" || s == "e") return Parity::Electric;
  throw Error(ErrorKind::InvalidQuantumNumbers, "unknown parity '" + s + "'");
}

const char* to_string(Gauge g) {
  switch (g) {
    case Gauge::Landau: return "landau";
    case Gauge::Lorentz: return "lorentz";
    case Gauge::Gradient: return "gradient";
  }
  return "unknown";
}

ModeIndex ModeIndex::make(int j, int m, int n, Parity parity) {
  // j = 0 has no D_{±1} angular basis and collapses the coupling b_nu.
  if (j < 1)
    throw Error(ErrorKind::InvalidQuantumNumbers, "j must be >= 1 (got " + std::to_string(j) + ")");
  if (j > kMaxWignerJ)
    throw Error(ErrorKind::InvalidQuantumNumbers, "j must be <= 30 (got " + std::to_string(j) + ")");
  if (m < -j || m > j)
    throw Error(ErrorKind::InvalidQuantumNumbers, "|m| must not exceed j");
  if (n < 0) throw Error(ErrorKind::InvalidQuantumNumbers, "n must be >= 0");
  return ModeIndex(j, m, n, parity);
}

int ModeIndex::parity_sign() const {
  const int exponent = parity_ == Parity::Magnetic ? j_ + 1 : j_;
  return exponent % 2 == 0 ? 1 : -1;
}

int spectrum(int j, int n) {
  if (j < 1)
    throw Error(ErrorKind::InvalidQuantumNumbers, "j must be >= 1 (got " + std::to_string(j) + ")");
  if (n < 0) throw Error(ErrorKind::InvalidQuantumNumbers, "n must be >= 0");
  return n + 1 + j;
}

RadialSolution::RadialSolution(const ModeIndex& mode) : mode_(mode) {
  // c_{k+1} = c_k (k - n)(k + j + 1) / ((k + 2j + 2)(k + 1))
  const int n = mode.n();
  const int j = mode.j();
  coeffs_.reserve(n + 1);
  std::complex<double> c(1.0);
  coeffs_.push_back(c);
  for (int k = 0; k < n; ++k) {
    c *= static_cast<double>((k - n) * (k + j + 1)) / static_cast<double>((k + 2 * j + 2) * (k + 1));
    coeffs_.push_back(c);
  }
}

PotentialSet electric_potentials_landau(const ModeIndex& mode) {
  if (mode.parity() != Parity::Electric)
    throw Error(ErrorKind::WrongParity, "Landau-gauge potentials exist for electric parity only");
  return PotentialSet(Gauge::Landau, mode, 0.0, mode);
}

PotentialSet electric_potentials_lorentz(const ModeIndex& mode, std::complex<double> amplitude) {
  if (mode.parity() != Parity::Electric)
    throw Error(ErrorKind::WrongParity, "Lorentz-gauge potentials exist for electric parity only");
  return PotentialSet(Gauge::Lorentz, mode, amplitude, mode);
}

PotentialSet gradient_solution(const ModeIndex& mode, int omega_g) {
  if (mode.parity() != Parity::Electric)
    throw Error(ErrorKind::WrongParity, "gradient solutions cannot have parity (-1)^(j+1)");
  if (omega_g < mode.j() + 1)
    throw Error(ErrorKind::InvalidQuantumNumbers, "omega_g must be >= j + 1");
  const ModeIndex scalar =
      ModeIndex::make(mode.j(), mode.m(), omega_g - mode.j() - 1, Parity::Electric);
  return PotentialSet(Gauge::Gradient, mode, 1.0, scalar);
}

}  // namespace dsem
