#ifndef JUMPGRAPH_JUMPGRAPH_HPP
#define JUMPGRAPH_JUMPGRAPH_HPP

#include <jumpgraph/catalog.hpp>
#include <jumpgraph/classify.hpp>
#include <jumpgraph/config.hpp>
#include <jumpgraph/dissipating.hpp>
#include <jumpgraph/dot.hpp>
#include <jumpgraph/errors.hpp>
#include <jumpgraph/graph.hpp>
#include <jumpgraph/graph_io.hpp>
#include <jumpgraph/iso.hpp>
#include <jumpgraph/parallel.hpp>
#include <jumpgraph/preimage.hpp>
#include <jumpgraph/snipped.hpp>
#include <jumpgraph/verify.hpp>

#endif  // JUMPGRAPH_JUMPGRAPH_HPP
