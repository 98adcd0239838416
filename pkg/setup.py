from setuptools import setup
import re

requirements = []
with open('requirements.txt') as f:
  requirements = [line for line in f.read().splitlines() if line and not line.startswith('#')]

version = ''
with open('laxtop/__init__.py') as f:
    version = re.search(r'^__version__\s*=\s*[\'"]([^\'"]*)[\'"]', f.read(), re.MULTILINE).group(1)

if not version:
    raise RuntimeError('version is not set')

if version.endswith(('a', 'b', 'rc')):
    try:
        import subprocess
        p = subprocess.Popen(['git', 'rev-list', '--count', 'HEAD'],
                             stdout=subprocess.PIPE, stderr=subprocess.PIPE)
        out, err = p.communicate()
        if out:
            version += out.decode('utf-8').strip()
        p = subprocess.Popen(['git', 'rev-parse', '--short', 'HEAD'],
                             stdout=subprocess.PIPE, stderr=subprocess.PIPE)
        out, err = p.communicate()
        if out:
            version += '+g' + out.decode('utf-8').strip()
    except Exception:
        pass

readme = ''
with open('README.md', encoding='utf-8') as f:
    readme = f.read()

packages = [
    'laxtop',
    'laxtop.cli',
    'laxtop.errors',
    'laxtop.fibgen',
    'laxtop.finsetcore',
    'laxtop.flags',
    'laxtop.internal',
    'laxtop.models',
    'laxtop.monads',
    'laxtop.reflect',
    'laxtop.tspace',
    'laxtop.typings',
    'laxtop.utils',
]

extras_require = {
    'docs': [
        'sphinx',
        'furo',
    ],
    'test': [
        'pytest',
        'hypothesis',
        'networkx',
    ],
}

setup(name='laxtop',
      author='NerdGuyAhmad',
      version=version,
      packages=packages,
      license='MIT',
      description='Finite lax relational monad algebras and their reflections.',
      long_description=readme,
      long_description_content_type="text/markdown",
      include_package_data=True,
      install_requires=requirements,
      extras_require=extras_require,
      entry_points={
        'console_scripts': ['laxtop = laxtop.cli.commands:main'],
      },
      python_requires='>=3.8.0',
      classifiers=[
        'Development Status :: 3 - Alpha',
        'License :: OSI Approved :: MIT License',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Software Development :: Libraries :: Python Modules',
        'Typing :: Typed',
      ]
)
