#pragma once

#include "vstab/clopen.hpp"
#include "vstab/constructions.hpp"
#include "vstab/element.hpp"
#include "vstab/error.hpp"
#include "vstab/germs.hpp"
#include "vstab/io.hpp"
#include "vstab/words.hpp"
