# src/models/__init__.py
# Models package

from .network import NeuralNet, LayerGradient, flatten_gradients, nn_forward, nn_backward

__all__ = ['NeuralNet', 'LayerGradient', 'flatten_gradients', 'nn_forward', 'nn_backward']
