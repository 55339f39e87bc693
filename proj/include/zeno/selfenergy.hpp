// selfenergy.hpp: the reduced self-energy
//
//   q(s) = -i Int_0^inf chi2(w) / (w - i s) dw,
//
// its boundary values on the cut {Re s = 0, Im s <= 0}, its continuation to
// the second sheet and the laser-dressed combination
//
//   Q(B, s) = (g2 omega0 / 2) [q(s + iB) + q(s - iB)].
//
// Which determination of q is used is always explicit (Sheet / SheetPoint).

#pragma once

#include "zeno/model.hpp"
#include "zeno/quadrature.hpp"

namespace zeno {

enum class Sheet { First, Continued };

std::string to_string(Sheet sheet);

/// A point of the Laplace plane together with the determination of each of
/// the two terms of Q(B, s). sheet_upper refers to the cut running down from
/// +iB (the q(s - iB) term), sheet_lower to the cut running down from -iB
/// (the q(s + iB) term). For B = 0 both cuts coincide and the tags must agree.
struct SheetPoint {
    cplx s;
    Sheet sheet_upper{Sheet::First};
    Sheet sheet_lower{Sheet::First};
};

/// q(-i eta + 0+) = re_part + i im_part.
struct BoundaryValue {
    double eta{0.0};
    double re_part{0.0};  // pi chi2(eta) theta(eta)
    double im_part{0.0};  // -P Int chi2(w)/(w - eta) dw
    double error{0.0};    // quadrature error estimate of im_part

    cplx value() const { return {re_part, im_part}; }
};

/// Int_0^inf chi2(w)/(w - w0) dw for w0 off the positive real axis.
///
/// For Re w0 > 0 the window [0, 2 Re w0] is integrated with chi2(w0)
/// subtracted and the subtracted piece added back through a logarithm, so
/// points just next to the axis cost no more than points far from it.
quad::Result cauchy_transform(const FormFactor& ff, cplx w0, const quad::Tolerance& tol = {});

/// Same transform of chi2' (used for the derivative of q).
quad::Result cauchy_transform_derivative(const FormFactor& ff, cplx w0,
                                         const quad::Tolerance& tol = {});

/// P Int_0^inf chi2(w)/(w - eta) dw by symmetric-window subtraction.
quad::Result principal_value(const FormFactor& ff, double eta, const quad::Tolerance& tol = {});

/// True when s lies on the cut {Re s = 0, Im s <= 0} (branch point included).
bool on_cut(cplx s);

/// First-sheet q(s). Throws CutError on the cut; use q_boundary there.
cplx q_first_sheet(const FormFactor& ff, cplx s, const quad::Tolerance& tol = {});

BoundaryValue q_boundary(const FormFactor& ff, double eta, const quad::Tolerance& tol = {});

/// q_II(s) = q(s) + 2 pi chi2(i s). On the cut itself the value continuous
/// from the left is returned, which equals q(-i eta + 0+).
cplx q_second_sheet(const FormFactor& ff, cplx s, const quad::Tolerance& tol = {});

cplx q_on_sheet(const FormFactor& ff, cplx s, Sheet sheet, const quad::Tolerance& tol = {});

/// dq/ds on the requested sheet.
cplx q_derivative(const FormFactor& ff, cplx s, Sheet sheet, const quad::Tolerance& tol = {});

/// Laser-off self-energy Q(s) = g2 omega0 q(s).
cplx self_energy(const SystemParams& params, const FormFactor& ff, cplx s, Sheet sheet,
                 const quad::Tolerance& tol = {});

/// Q(B, s). Only |B| matters. Throws SingularityError at the branch points
/// s = -+iB.
cplx dressed_self_energy(const SystemParams& params, const FormFactor& ff, double B,
                         const SheetPoint& pt, const quad::Tolerance& tol = {});

/// dQ(B, s)/ds.
cplx dressed_self_energy_derivative(const SystemParams& params, const FormFactor& ff, double B,
                                    const SheetPoint& pt, const quad::Tolerance& tol = {});

} // namespace zeno
