# src/models/network.py
# Feedforward network with hand-written backpropagation (numpy)

from dataclasses import dataclass

import numpy as np

from src.errors import InternalConsistencyError


def relu(x):
    return np.maximum(x, 0.0)


def relu_grad(z):
    return np.where(z > 0, 1.0, 0.0)


@dataclass
class LayerGradient:
    weights: np.ndarray
    biases: np.ndarray


class NeuralNet:
    """Affine layers with ReLU on hidden layers and identity on the output.

    Weights are stored as (fan_out, fan_in); inputs may be a single vector or a
    (batch, features) matrix.
    """

    def __init__(self, layer_sizes, rng=None):
        if len(layer_sizes) < 2:
            raise InternalConsistencyError(f"network needs input and output sizes: {layer_sizes}")
        self.layer_sizes = tuple(int(n) for n in layer_sizes)
        rng = rng if rng is not None else np.random.default_rng(0)

        self.weights = []
        self.biases = []
        for fan_in, fan_out in zip(self.layer_sizes[:-1], self.layer_sizes[1:]):
            limit = np.sqrt(6.0 / (fan_in + fan_out))
            self.weights.append(rng.uniform(-limit, limit, size=(fan_out, fan_in)))
            self.biases.append(np.zeros(fan_out))

        self._cache = None

    @property
    def input_size(self):
        return self.layer_sizes[0]

    @property
    def parameter_count(self):
        return sum(w.size + b.size for w, b in zip(self.weights, self.biases))

    def forward(self, x):
        x = np.asarray(x, dtype=np.float64)
        single = x.ndim == 1
        a = x[np.newaxis, :] if single else x
        if a.shape[1] != self.input_size:
            raise InternalConsistencyError(
                f"input has {a.shape[1]} features, network expects {self.input_size}")

        # remember every pre-activation for the backward pass
        inputs, pre_activations = [], []
        last = len(self.weights) - 1
        for i, (w, b) in enumerate(zip(self.weights, self.biases)):
            inputs.append(a)
            z = a @ w.T + b
            pre_activations.append(z)
            a = z if i == last else relu(z)

        self._cache = (inputs, pre_activations, single)
        return a[0] if single else a

    def backward(self, output_gradient):
        """Parameter gradients of the loss whose output gradient is given"""
        if self._cache is None:
            raise InternalConsistencyError("backward called before forward")
        inputs, pre_activations, single = self._cache

        delta = np.asarray(output_gradient, dtype=np.float64)
        if single:
            delta = delta[np.newaxis, :]

        grads = [None] * len(self.weights)
        for i in reversed(range(len(self.weights))):
            grads[i] = LayerGradient(weights=delta.T @ inputs[i], biases=delta.sum(axis=0))
            if i > 0:
                delta = (delta @ self.weights[i]) * relu_grad(pre_activations[i - 1])
        return grads

    def apply_gradients(self, grads, learning_rate):
        for w, b, g in zip(self.weights, self.biases, grads):
            w -= learning_rate * g.weights
            b -= learning_rate * g.biases

    def copy_from(self, other):
        if other.layer_sizes != self.layer_sizes:
            raise InternalConsistencyError(
                f"layer sizes differ: {other.layer_sizes} vs {self.layer_sizes}")
        self.weights = [w.copy() for w in other.weights]
        self.biases = [b.copy() for b in other.biases]

    def clone(self):
        twin = NeuralNet.__new__(NeuralNet)
        twin.layer_sizes = self.layer_sizes
        twin._cache = None
        twin.copy_from(self)
        return twin

    def get_flat_parameters(self):
        parts = []
        for w, b in zip(self.weights, self.biases):
            parts.append(w.ravel())
            parts.append(b.ravel())
        return np.concatenate(parts)

    def set_flat_parameters(self, flat):
        flat = np.asarray(flat, dtype=np.float64)
        if flat.size != self.parameter_count:
            raise InternalConsistencyError(
                f"expected {self.parameter_count} parameters, got {flat.size}")
        offset = 0
        for i, (w, b) in enumerate(zip(self.weights, self.biases)):
            self.weights[i] = flat[offset:offset + w.size].reshape(w.shape).copy()
            offset += w.size
            self.biases[i] = flat[offset:offset + b.size].copy()
            offset += b.size


def flatten_gradients(grads):
    parts = []
    for g in grads:
        parts.append(g.weights.ravel())
        parts.append(g.biases.ravel())
    return np.concatenate(parts)


def nn_forward(net, x):
    return net.forward(x)


def nn_backward(net, x, output_gradient):
    net.forward(x)
    return net.backward(output_gradient)
