from setuptools import setup

setup(name='devsurf',
      description='Construction and verification of developable Bezier '
                  'surface patches.',
      license='MIT',
      packages=['devsurf'],
      install_requires=['numpy', 'scipy', 'matplotlib'],
      extras_require={'test' : ['pytest', 'hypothesis']},
      entry_points={'console_scripts' : ['devsurf=devsurf.cli:main']},
      zip_safe=False)
