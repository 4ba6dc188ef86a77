#ifndef CATFROB_HPP
#define CATFROB_HPP

#include "catfrob/adjunction.hpp"
#include "catfrob/algebra_catalog.hpp"
#include "catfrob/algebra_objects.hpp"
#include "catfrob/eilenberg_moore.hpp"
#include "catfrob/finset.hpp"
#include "catfrob/finvect.hpp"
#include "catfrob/frobenius_search.hpp"
#include "catfrob/grvect.hpp"
#include "catfrob/json_io.hpp"
#include "catfrob/lindist.hpp"
#include "catfrob/monad.hpp"
#include "catfrob/set_comonad.hpp"
#include "catfrob/suite.hpp"
#include "catfrob/wirthmuller.hpp"

#endif  // CATFROB_HPP
