#pragma once

#include "stpd/archive.hpp"
#include "stpd/bwt.hpp"
#include "stpd/compress.hpp"
#include "stpd/general_locator.hpp"
#include "stpd/lpf.hpp"
#include "stpd/measures.hpp"
#include "stpd/perm.hpp"
#include "stpd/phi.hpp"
#include "stpd/stcolex_index.hpp"
#include "stpd/stlex_tree.hpp"
#include "stpd/stpos.hpp"
#include "stpd/suffix_sort.hpp"
#include "stpd/text.hpp"
#include "stpd/text_oracle.hpp"
#include "stpd/types.hpp"
