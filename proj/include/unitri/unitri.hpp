#pragma once

#include "unitri/colored.hpp"
#include "unitri/combinatorics.hpp"
#include "unitri/ftriangle.hpp"
#include "unitri/io.hpp"
#include "unitri/parallel.hpp"
#include "unitri/polynomial.hpp"
#include "unitri/rational.hpp"
#include "unitri/rootcert.hpp"
#include "unitri/scomplex.hpp"
#include "unitri/transform.hpp"
