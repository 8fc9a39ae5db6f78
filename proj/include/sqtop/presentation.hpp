#pragma once

#include <map>
#include <string>
#include <vector>

#include "sqtop/parse.hpp"
#include "sqtop/poly.hpp"

namespace sqtop {

enum class Mode { Gf2, Gf2Param, Int };

std::string mode_name(Mode m);
Mode mode_from_name(const std::string& s);

// Raw textual inputs, exactly as they appear in a manifest file.
struct PresentationData {
    std::string name;
    Mode mode = Mode::Gf2;
    int dimension = 0;
    std::vector<Generator> generators;
    std::vector<std::string> parameters;
    std::vector<std::string> relations;
    // generator name -> square index -> class expression
    std::map<std::string, std::map<int, std::string>> steenrod;
    bool assume_smooth = false;
};

// Parsed and validated presentation of a graded-commutative quotient ring.
class Presentation {
  public:
    static Presentation make(const PresentationData& data);

    const PresentationData& data() const { return data_; }
    const std::string& name() const { return data_.name; }
    Mode mode() const { return data_.mode; }
    int dim() const { return data_.dimension; }
    bool assume_smooth() const { return data_.assume_smooth; }
    const GeneratorTable& gens() const { return gens_; }
    const ParamTable& params() const { return params_; }

    const std::vector<Gf2Poly>& relations() const;      // GF(2) modes
    const std::vector<IntPoly>& int_relations() const;  // integer mode

    // User square entries: (generator index, square index) -> raw class.
    const std::map<std::pair<std::size_t, int>, Gf2Poly>& squares() const { return squares_; }

    // Fix parameters to the given 0/1 values; the named parameters disappear
    // from the parameter table and from every square entry.
    Presentation instantiate(const std::map<std::string, bool>& values) const;

  private:
    Presentation() = default;

    PresentationData data_;
    GeneratorTable gens_;
    ParamTable params_;
    std::vector<Gf2Poly> relations2_;
    std::vector<IntPoly> relationsZ_;
    std::map<std::pair<std::size_t, int>, Gf2Poly> squares_;
};

}  // namespace sqtop
