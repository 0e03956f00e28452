#include "ordsmith/numeric.hpp"
namespace ordsmith {}
