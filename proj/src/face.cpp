#include "novikov/face.hpp"

namespace nov {

int face_dim(Face f) {
    switch (f) {
        case Face::Empty: return -1;
        case Face::v_bl: case Face::v_br: case Face::v_tl: case Face::v_tr: return 0;
        case Face::e_b: case Face::e_t: case Face::e_l: case Face::e_r: return 1;
        case Face::S: return 2;
    }
    return -1;
}

Monomial barycentre(Face f) {
    switch (f) {
        case Face::Empty: return {0, 0};
        case Face::v_bl: return {-1, -1};
        case Face::v_br: return {1, -1};
        case Face::v_tl: return {-1, 1};
        case Face::v_tr: return {1, 1};
        case Face::e_b: return {0, -1};
        case Face::e_t: return {0, 1};
        case Face::e_l: return {-1, 0};
        case Face::e_r: return {1, 0};
        case Face::S: return {0, 0};
    }
    return {0, 0};
}

std::string face_name(Face f) {
    switch (f) {
        case Face::Empty: return "empty";
        case Face::v_bl: return "v_bl";
        case Face::v_br: return "v_br";
        case Face::v_tl: return "v_tl";
        case Face::v_tr: return "v_tr";
        case Face::e_b: return "e_b";
        case Face::e_t: return "e_t";
        case Face::e_l: return "e_l";
        case Face::e_r: return "e_r";
        case Face::S: return "S";
    }
    return "?";
}

Face face_from_name(const std::string& s) {
    if (s == "empty") return Face::Empty;
    for (Face f : kFaces)
        if (face_name(f) == s) return f;
    throw std::invalid_argument("unknown face " + s);
}

bool face_leq(Face f, Face g) {
    if (f == g || f == Face::Empty || g == Face::S) return true;
    if (face_dim(f) != 0 || face_dim(g) != 1) return false;
    // a vertex lies on an edge iff they agree in the edge's fixed coordinate
    Monomial v = barycentre(f), e = barycentre(g);
    return (e.ex != 0 && e.ex == v.ex) || (e.ey != 0 && e.ey == v.ey);
}

std::vector<Face> faces_of_dim(int d) {
    std::vector<Face> r;
    if (d == -1) r.push_back(Face::Empty);
    for (Face f : kFaces)
        if (face_dim(f) == d) r.push_back(f);
    return r;
}

std::vector<Face> star(Face f) {
    std::vector<Face> r;
    for (Face g : kFaces)
        if (face_leq(f, g)) r.push_back(g);
    return r;
}

int incidence(Face f, Face g) {
    if (face_dim(g) != face_dim(f) + 1 || !face_leq(f, g))
        throw NotIncident(face_name(f) + " is not a facet of " + face_name(g));
    if (f == Face::Empty || g == Face::S) return 1;
    // edges run counter-clockwise: end vertex +1, start vertex -1
    Face start{}, end{};
    switch (g) {
        case Face::e_b: start = Face::v_bl; end = Face::v_br; break;
        case Face::e_r: start = Face::v_br; end = Face::v_tr; break;
        case Face::e_t: start = Face::v_tr; end = Face::v_tl; break;
        case Face::e_l: start = Face::v_tl; end = Face::v_bl; break;
        default: break;
    }
    return f == end ? 1 : (f == start ? -1 : 0);
}

Monomial monomial_m(Face f, Face g) {
    if (!face_leq(f, g)) throw NotIncident(face_name(f) + " is not contained in " + face_name(g));
    return barycentre(g) - barycentre(f);
}

}  // namespace nov
