#pragma once
// Face lattice of the square [-1,1]^2.

#include "novikov/errors.hpp"
#include "novikov/laurent.hpp"

#include <array>
#include <string>
#include <vector>

namespace nov {

enum class Face { Empty, v_bl, v_br, v_tl, v_tr, e_b, e_t, e_l, e_r, S };

inline constexpr std::array<Face, 4> kVertices{Face::v_bl, Face::v_br, Face::v_tl, Face::v_tr};
inline constexpr std::array<Face, 4> kEdges{Face::e_b, Face::e_l, Face::e_r, Face::e_t};
// all non-empty faces, vertices then edges then S
inline constexpr std::array<Face, 9> kFaces{Face::v_bl, Face::v_br, Face::v_tl, Face::v_tr,
                                            Face::e_b,  Face::e_l,  Face::e_r,  Face::e_t,
                                            Face::S};

int face_dim(Face f);
Monomial barycentre(Face f);
std::string face_name(Face f);
Face face_from_name(const std::string& s);

// F is a face of G (F may be empty, F == G allowed)
bool face_leq(Face f, Face g);
std::vector<Face> faces_of_dim(int d);
// faces G with F <= G, in kFaces order
std::vector<Face> star(Face f);

// incidence number [F:G] for dim G = dim F + 1
int incidence(Face f, Face g);
// exponent of m_FG = v_G - v_F
Monomial monomial_m(Face f, Face g);

}  // namespace nov
