#pragma once

namespace maxsurf {

/// Parameter m of the Jacobi functions, kept together with its complement
/// 1 - m so that values close to 1 do not lose precision.
class EllipticParameter {
 public:
  EllipticParameter() = default;
  /// Throws ErrorKind::Domain unless 0 <= mu <= 1 (within 1e-14).
  explicit EllipticParameter(double mu);
  static EllipticParameter from_complement(double mc);

  double mu() const noexcept { return mu_; }
  double complement() const noexcept { return mc_; }

 private:
  EllipticParameter(double mu, double mc) : mu_(mu), mc_(mc) {}
  double mu_ = 0.0;
  double mc_ = 1.0;
};

struct SnCnDn {
  double sn;
  double cn;
  double dn;
};

double carlson_rf(double x, double y, double z);

double ellip_K(const EllipticParameter& m);
double ellip_F(double phi, const EllipticParameter& m);
double jacobi_am(double x, const EllipticParameter& m);

SnCnDn jacobi_sncndn(double x, const EllipticParameter& m);
double jacobi_sn(double x, const EllipticParameter& m);
double jacobi_cn(double x, const EllipticParameter& m);
double jacobi_dn(double x, const EllipticParameter& m);
double jacobi_tn(double x, const EllipticParameter& m);

// Principal inverses, results in [0, K].
double arcsn(double y, const EllipticParameter& m);
double arccn(double y, const EllipticParameter& m);
double arctn(double y, const EllipticParameter& m);

inline double ellip_K(double mu) { return ellip_K(EllipticParameter(mu)); }
inline double ellip_F(double phi, double mu) { return ellip_F(phi, EllipticParameter(mu)); }
inline double jacobi_am(double x, double mu) { return jacobi_am(x, EllipticParameter(mu)); }
inline double jacobi_sn(double x, double mu) { return jacobi_sn(x, EllipticParameter(mu)); }
inline double jacobi_cn(double x, double mu) { return jacobi_cn(x, EllipticParameter(mu)); }
inline double jacobi_dn(double x, double mu) { return jacobi_dn(x, EllipticParameter(mu)); }
inline double jacobi_tn(double x, double mu) { return jacobi_tn(x, EllipticParameter(mu)); }
inline double arcsn(double y, double mu) { return arcsn(y, EllipticParameter(mu)); }
inline double arccn(double y, double mu) { return arccn(y, EllipticParameter(mu)); }
inline double arctn(double y, double mu) { return arctn(y, EllipticParameter(mu)); }

}  // namespace maxsurf
