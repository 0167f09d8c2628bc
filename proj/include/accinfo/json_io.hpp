#ifndef ACCINFO_JSON_IO_HPP
#define ACCINFO_JSON_IO_HPP

#include <string>

#include "accinfo/ensemble.hpp"

namespace accinfo {

/// Ensemble file: {"dim": d, "states": [matrix, ...]}; a matrix is an array
/// of rows, an entry is [re, im]. POVMs use "members" instead of "states".
Ensemble load_ensemble(const std::string& path);
void save_ensemble(const Ensemble& e, const std::string& path);

Povm load_povm(const std::string& path);
void save_povm(const Povm& m, const std::string& path);

}  // namespace accinfo

#endif
