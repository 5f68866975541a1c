#pragma once

// Umbrella header.

#include "fibcipher/alphabet.hpp"
#include "fibcipher/cipher.hpp"
#include "fibcipher/cracker.hpp"
#include "fibcipher/errors.hpp"
#include "fibcipher/etable.hpp"
#include "fibcipher/keyschedule.hpp"
#include "fibcipher/random_source.hpp"
#include "fibcipher/textio.hpp"
