#ifndef LEFSCHETZ_LEFSCHETZ_HPP
#define LEFSCHETZ_LEFSCHETZ_HPP

#include <lefschetz/dihedral_tables.hpp>
#include <lefschetz/group_io.hpp>
#include <lefschetz/report.hpp>

#endif // LEFSCHETZ_LEFSCHETZ_HPP
