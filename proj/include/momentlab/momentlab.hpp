#ifndef MOMENTLAB_MOMENTLAB_HPP
#define MOMENTLAB_MOMENTLAB_HPP

#include "momentlab/builtin.hpp"
#include "momentlab/checks.hpp"
#include "momentlab/lie_algebra.hpp"
#include "momentlab/lie_poisson.hpp"
#include "momentlab/moment.hpp"
#include "momentlab/observable.hpp"
#include "momentlab/serialize.hpp"
#include "momentlab/symplectic.hpp"
#include "momentlab/unitary_rep.hpp"

#endif
