#include <pybind11/pybind11.h>
PYBIND11_MODULE(_latt14, m) { m.doc() = "placeholder"; }
