#include <pybind11/pybind11.h>
PYBIND11_MODULE(_ordsmith, m) { m.doc() = "ordsmith"; }
