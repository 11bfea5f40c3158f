#pragma once

#include <string>

#include "absord/cosets.hpp"
#include "absord/lattice.hpp"
#include "absord/poset.hpp"
#include "absord/rootspace.hpp"

namespace absord {

std::string flat_str(const Flat& f);

// Renderers produce byte-stable output: json keys are sorted, elements keep
// their poset indices.
std::string poset_json(const RankedPoset& p);
std::string poset_dot(const RankedPoset& p);
std::string poset_table(const RankedPoset& p);

std::string modularity_json(const GroupUniverse& U, const ModularityReport& r);
std::string modularity_table(const GroupUniverse& U, const ModularityReport& r);

std::string quasi_json(const QuasiModularityReport& r);
std::string quasi_table(const QuasiModularityReport& r);

std::string lattice_json(const FlatLattice& L);
std::string lattice_table(const FlatLattice& L);

}  // namespace absord
