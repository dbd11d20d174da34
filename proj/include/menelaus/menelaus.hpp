#pragma once

#include "menelaus/error.hpp"
#include "menelaus/complex.hpp"
#include "menelaus/logic.hpp"
#include "menelaus/derivation.hpp"
#include "menelaus/normalize.hpp"
#include "menelaus/decide.hpp"
#include "menelaus/geometry.hpp"
#include "menelaus/operad.hpp"
#include "menelaus/corpus.hpp"
#include "menelaus/io.hpp"
