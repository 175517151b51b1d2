#include "hsp/presentations/relations.hpp"

namespace hsp {

const RelationTable& superplane_relations() {
  static const RelationTable t{
      {"Eq3a", "x*th", "q*th*x + h2*x^2", "", ""},
      {"Eq3b", "th^2", "-h2*th*x", "", ""},
  };
  return t;
}

const RelationTable& dual_plane_relations() {
  static const RelationTable t{
      {"Eq12a", "dth*dx", "p*dx*dth - h1*dth^2", "", ""},
      {"Eq12b", "dx^2", "h1*dx*dth", "", ""},
  };
  return t;
}

const RelationTable& derivative_coordinate_relations() {
  static const RelationTable t{
      {"Eq20a", "px*x", "1 + p*q*x*px + h1*th*px + h2*x*pth + h1*h2*(x*px + th*pth) + (p*q - 1)*th*pth",
       "1 + p*q*x*px - h1*th*px + h2*x*pth + h1*h2*(x*px + th*pth) + (p*q - 1)*th*pth",
       "sign of h1*th*px; the p = q = 1 display has -h1*th*px"},
      {"Eq20b", "px*th", "p*th*px - p*h2*(x*px + th*pth)", "", ""},
      {"Eq20c", "pth*x", "q*x*pth - q*h1*(x*px + th*pth)", "", ""},
      {"Eq20d", "pth*th", "1 - th*pth + h1*th*px + h2*x*pth + h1*h2*(x*px + th*pth)",
       "1 - th*pth - h1*th*px + h2*x*pth + h1*h2*(x*px + th*pth)",
       "sign of h1*th*px; the p = q = 1 display has -h1*th*px"},
  };
  return t;
}

const RelationTable& derivative_relations() {
  static const RelationTable t{
      {"Eq21a", "pth*px", "p*px*pth + h1*px^2", "", ""},
      {"Eq21b", "pth^2", "h1*px*pth", "", ""},
  };
  return t;
}

const RelationTable& derivative_differential_relations() {
  static const RelationTable t{
      {"Eq24a", "px*dx", "p*q*dx*px + h1*dth*px - h2*dx*pth + h1*h2*(dx*px + dth*pth) + (p*q - 1)*dth*pth", "", ""},
      {"Eq24b", "px*dth", "p*dth*px + p*h2*(dx*px + dth*pth)", "", ""},
      {"Eq24c", "pth*dx", "-q*dx*pth - q*h1*(dx*px + dth*pth)", "", ""},
      {"Eq24d", "pth*dth", "dth*pth - h1*dth*px + h2*dx*pth + h1*h2*(dx*px + dth)",
       "dth*pth - h1*dth*px + h2*dx*pth - h1*h2*(dx*px + dth*pth)",
       "displayed h1*h2 term is not parity-homogeneous; the holding form is -h1*h2*(dx*px + dth*pth)"},
  };
  return t;
}

const RelationTable& h_calculus_relations() {
  static const RelationTable t{
      {"Eq35a", "x*th", "th*x + h2*x^2", "", ""},
      {"Eq35b", "th^2", "-h2*th*x", "", ""},
      {"Eq35c", "dx*dth", "dth*dx + h1*dth^2", "", ""},
      {"Eq35d", "dx^2", "h1*dx*dth", "", ""},
      {"Eq36a", "px*x", "1 + x*px - h1*th*px + h2*x*pth + h1*h2*(x*px + th*pth)", "", ""},
      {"Eq36b", "px*th", "th*px - h2*(x*px + th*pth)", "", ""},
      {"Eq36c", "pth*x", "x*pth - h1*(x*px + th*pth)", "", ""},
      {"Eq36d", "pth*th", "1 - th*pth - h1*th*px + h2*x*pth + h1*h2*(x*px + th*pth)", "", ""},
      {"Eq37a", "px*pth", "pth*px - h1*px^2", "",
       "holds as an identity; the presentation orients pth*px -> px*pth + h1*px^2"},
      {"Eq37b", "pth^2", "h1*pth*px", "",
       "holds as an identity; the presentation rule is pth*pth -> h1*px*pth"},
      {"Eq38a", "x*dx", "dx*x + h1*(dx*th - dth*x) + h1*h2*dx*x", "", ""},
      {"Eq38b", "x*dth", "dth*x - h1*dth*th - h2*dx*x + h1*h2*dx*th", "", ""},
      {"Eq38c", "th*dx", "-dx*th + h1*dth*th - h2*dx*x - h1*h2*dth*x", "", ""},
      {"Eq38d", "th*dth", "dth*th - h2*(dx*th + dth*x) - h1*h2*dth*th", "", ""},
      {"Eq39a", "px*dx", "dx*px + h1*dth*px - h2*dx*pth + h1*h2*(dx*px + dth*pth)", "", ""},
      {"Eq39b", "px*dth", "dth*px + h2*(dx*px + dth*pth)", "", ""},
      {"Eq39c", "pth*dx", "-dx*pth - h1*(dx*px + dth*pth)", "", ""},
      {"Eq39d", "pth*dth", "dth*pth - h1*dth*px + h2*dx*pth + h1*h2*(dx*px + dth*pth)",
       "dth*pth - h1*dth*px + h2*dx*pth - h1*h2*(dx*px + dth*pth)", "sign of the h1*h2 term"},
  };
  return t;
}

const RelationTable& supergroup_relations() {
  static const RelationTable t{
      {"Eq34a", "a*bt", "bt*a - h1*(a^2 - bt*gm - a*d)", "", ""},
      {"Eq34b", "d*bt", "bt*d + h1*(d^2 + bt*gm - d*a)", "", ""},
      {"Eq34c", "a*gm", "gm*a + h2*(a^2 + gm*bt - a*d)", "", ""},
      {"Eq34d", "d*gm", "gm*d - h2*(d^2 - gm*bt - d*a)", "", ""},
      {"Eq34e", "bt^2", "h1*bt*(a - d)", "", ""},
      {"Eq34f", "gm^2", "h2*gm*(d - a)", "", ""},
      {"Eq34g", "bt*gm", "-gm*bt + (h1*gm - h2*bt)*(a - d)", "", ""},
      {"Eq34h", "a*d", "d*a + h1*(a - d)*gm + h2*bt*(a - d)", "", ""},
  };
  return t;
}

const RelationTable& one_form_relations() {
  static const RelationTable t{
      {"Eq26a", "x*w", "w*x - h1*u*x", "", ""},
      {"Eq26b", "th*w", "-w*th + h1*u*th", "", ""},
      {"Eq26c", "x*u", "u*x", "", ""},
      {"Eq26d", "th*u", "u*th - h2*(w*th + u*x)", "u*th", "h2*(w*th + u*x) = h2*dth is not a correction term"},
      {"Eq27a", "w^2", "0", "", ""},
      {"Eq27b", "w*u", "u*w", "", ""},
  };
  return t;
}

const RelationTable& operator_relations() {
  static const RelationTable t{
      {"Eq29a", "T*nabla", "nabla*T", "", ""},
      {"Eq29b", "nabla^2", "0", "", ""},
      {"Eq30a", "T*x", "x + x*T", "", ""},
      {"Eq30b", "nabla*x", "x*nabla - h1*x*T", "", ""},
      {"Eq30c", "T*th", "th + th*T", "", ""},
      {"Eq30d", "nabla*th", "x - th*nabla + h1*th*T", "x - th*nabla - h1*th*T", "sign of h1*th*T"},
  };
  return t;
}

const RelationTable& phase_space_relations() {
  static const RelationTable t{
      {"Eq48a", "xh*thh", "thh*xh + h2*xh^2", "", ""},
      {"Eq48b", "thh^2", "-h2*thh*xh", "", ""},
      {"Eq48c", "pxh*pthh", "pthh*pxh + i*h1*pxh^2", "", ""},
      {"Eq48d", "pthh^2", "-i*h1*pxh*pthh", "", ""},
      {"Eq48e", "pxh*xh", "i + xh*pxh + i*h2*xh*pthh - h1*thh*pxh + h1*h2*(1 + xh*pxh + i*thh*pthh)",
       "i + xh*pxh + i*h2*xh*pthh - h1*thh*pxh + h1*h2*(i + xh*pxh + i*thh*pthh)",
       "constant inside the h1*h2 term is i, not 1"},
      {"Eq48f", "pxh*thh", "thh*pxh - h2*(xh*pxh + i*thh*pthh)", "", ""},
      {"Eq48g", "pthh*xh", "xh*pthh + h1*(i*xh*pxh - thh*pthh)", "", ""},
      {"Eq48h", "pthh*thh", "1 - thh*pthh + h2*xh*pthh + i*h1*thh*pxh - h1*h2*(1 + i*xh*pxh - thh*pthh)", "", ""},
  };
  return t;
}

const RelationTable& clifford_relations() {
  static const RelationTable t{
      {"Eq50a", "c1*c2", "c2*c1 - h1*g2*c1 + i*(1 + h2*c2*g1) + h1*h2*(1 + g2*g1 + c2*c1)",
       "c2*c1 - h1*g2*c1 + i*(1 + h2*c2*g1) + h1*h2*(i + i*g2*g1 + c2*c1)",
       "h1*h2 term inherits the factors of i of the pxh*xh relation"},
      {"Eq50b", "c1*g2", "g2*c1 - h2*(c2*c1 + i*g2*g1)", "", ""},
      {"Eq50c", "g1*c1", "c1*g1 - i*h1*c1^2", "", ""},
      {"Eq50d", "g1*c2", "c2*g1 - h1*(g2*g1 - i*c2*c1)", "", ""},
      {"Eq50e", "g1*g2", "1 - g2*g1 + i*h1*g2*c1 + h2*c2*g1 - h1*h2*(1 + c2*c1 - g2*g1)",
       "1 - g2*g1 + i*h1*g2*c1 + h2*c2*g1 - h1*h2*(1 + i*c2*c1 - g2*g1)",
       "c2*c1 inside the h1*h2 term needs a factor of i"},
      {"Eq50f", "g1^2", "-i*h1*c1*g1", "", ""},
      {"Eq50g", "g2^2", "-h2*g2*c2", "", ""},
      {"Eq50h", "g2*c2", "c2*g2 - h2*c2^2", "", ""},
  };
  return t;
}

const RelationTable& oscillator_relations() {
  static const RelationTable t{
      {"Eq54a", "A*Ap", "1 + p*q*Ap*A + (p*q - 1)*Bp*B", "", ""},
      {"Eq54b", "B*Bp", "1 - Bp*B", "", ""},
      {"Eq54c", "B^2", "0", "", ""},
      {"Eq54d", "Bp^2", "0", "", ""},
      {"Eq54e", "A*Bp", "p*Bp*A", "", ""},
      {"Eq54f", "A*B", "1/p*B*A", "", ""},
      {"Eq54g", "Ap*B", "1/q*B*Ap", "", ""},
      {"Eq54h", "Ap*Bp", "q*Bp*Ap", "", ""},
  };
  return t;
}

}  // namespace hsp
