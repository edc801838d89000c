#ifndef CUBEFAM_CUBEFAM_HPP
#define CUBEFAM_CUBEFAM_HPP

#include "cubes.hpp"
#include "family.hpp"
#include "homology.hpp"
#include "json_io.hpp"
#include "obj_export.hpp"
#include "snf.hpp"
#include "verify.hpp"

#endif  // CUBEFAM_CUBEFAM_HPP
