#pragma once

#include "modclass/error.hpp"
#include "modclass/limits.hpp"
#include "modclass/abelian.hpp"
#include "modclass/ring.hpp"
#include "modclass/ring_builders.hpp"
#include "modclass/ring_spec.hpp"
#include "modclass/ideals.hpp"
#include "modclass/module.hpp"
#include "modclass/homs.hpp"
#include "modclass/decompose.hpp"
#include "modclass/properties.hpp"
#include "modclass/pp.hpp"
#include "modclass/classifier.hpp"
#include "modclass/corpus.hpp"
#include "modclass/meta_suite.hpp"
