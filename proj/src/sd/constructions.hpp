#pragma once

#include <map>
#include <string>
#include <vector>

#include "sd/code.hpp"

namespace sd {

Code direct_sum(const Code& a, const Code& b);
// Same generator matrix read over a field containing F2 (or Z_m for m even, reading 0/1).
Code tensor_extend(const Code& c, const Alphabet& target);

// ---------------------------------------------------------------- gluing

struct GlueElement {
    char label;
    Vec word;
};

struct Component {
    std::string name;
    Code code;
    std::vector<GlueElement> glue;  // label '0' (zero word) is implicit
    // nullptr if the label is unknown
    const Vec* find(char label) const;
};

// d4, d6, ..., e7, e8, i2 from the component file; f<n> is the free component
// of length n whose glue letters A, B, ... are the unit vectors.
Component component(const std::string& name);
std::vector<std::string> component_names();

struct GlueResult {
    Code code;
    bool self_dual = false;
};
// Each glue word is a string of labels, one character per component.
GlueResult glue(const std::vector<Component>& comps, const std::vector<std::string>& glue_words);

// ---------------------------------------------------------------- subtraction

// cols = c0 c1 c2 c3 ...: pairs (c0,c1), (c2,c3), ... carry the copy of i2^m.
Code subtract(const Code& b, const std::vector<int>& cols);

// ---------------------------------------------------------------- Z4

// Z4 code with residue A and torsion B (A inside B).
Code z4_from_binary_pair(const Code& a, const Code& b);
// Self-dual Z4 lift of a Type II binary code with every norm divisible by 8.
Code lift_to_z4(const Code& c);

// Polynomials over Z4 (or F2), coefficient of x^i at index i.
using IntPoly = std::vector<int>;
IntPoly graeffe_lift(const IntPoly& g2, int n);
// Remainder of a by b mod m; b must have a unit leading coefficient.
IntPoly poly_mod(IntPoly a, IntPoly b, int m);
std::string poly_str(const IntPoly& p);
IntPoly parse_int_poly(const std::string& s);  // "1+x+x^5" or coefficient string "1100011"

// Cyclic code of length n generated by g, plus a leading coordinate making
// each row sum to 0.  extended = false omits that coordinate.
Code cyclic_code(const Alphabet& A, const IntPoly& g, int n, bool extended);

Code shorten_z4(const Code& c, int coord);

// ---------------------------------------------------------------- double circulants

enum class DcForm { Bordered, Pure };  // bordered [I | 0 1..1 / 1 R], pure [I | R]
DcForm parse_dc_form(const std::string& s);  // D1 / D2 (also bordered / pure)
// r in hexadecimal, most significant bit first, left-padded to the circulant size.
Code double_circulant(DcForm form, const std::string& hex, int n);

// ---------------------------------------------------------------- tetrad codes over Z4

// D (m-1 tetrads 1113), O (plus 2020..20), P (plus 2 v2), S (all of them, self-dual)
Code z4_tetrad_code(char variant, int m);
// rows 1..1 and 2 e_i + 2 e_last, length 4m
Code klemm_code(int m);

// ---------------------------------------------------------------- catalog

struct CatalogEntry {
    std::string name;
    std::string about;
    bool stub = false;
    Code code;
    std::string dc_form, dc_hex;
    std::map<std::string, std::string> expect;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);
// raw text of a shipped data file (codes.txt, components.txt, type2_n32_aut.txt)
const std::string& catalog_file(const std::string& name);

}  // namespace sd
