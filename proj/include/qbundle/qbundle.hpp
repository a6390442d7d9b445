#ifndef QBUNDLE_QBUNDLE_HPP
#define QBUNDLE_QBUNDLE_HPP

#include "qbundle/bundle.hpp"
#include "qbundle/calculi.hpp"
#include "qbundle/confluence.hpp"
#include "qbundle/connection.hpp"
#include "qbundle/dga.hpp"
#include "qbundle/error.hpp"
#include "qbundle/hopf.hpp"
#include "qbundle/ideal.hpp"
#include "qbundle/linalg.hpp"
#include "qbundle/monopole.hpp"
#include "qbundle/morphism.hpp"
#include "qbundle/parser.hpp"
#include "qbundle/presentation.hpp"
#include "qbundle/property.hpp"
#include "qbundle/report.hpp"
#include "qbundle/scalar.hpp"
#include "qbundle/tensor.hpp"

#endif
